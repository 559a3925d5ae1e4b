#include "autoseq/automaton_ops.hpp"

#include "partition.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace autoseq {
namespace detail {

std::vector<State> bfs_order(std::size_t num_states, std::size_t alphabet, const std::vector<State>& delta,
                             State initial) {
    std::vector<char> seen(num_states, 0);
    std::vector<State> order{initial};
    seen[static_cast<std::size_t>(initial)] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        auto q = static_cast<std::size_t>(order[head]);
        for (std::size_t a = 0; a < alphabet; ++a) {
            State r = delta[q * alphabet + a];
            if (!seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = 1;
                order.push_back(r);
            }
        }
    }
    return order;
}

std::vector<int> refine_partition(std::size_t n, std::size_t k, const std::vector<State>& delta,
                                  const std::vector<int>& initial_class) {
    // Inverse transitions in CSR form, indexed by letter * n + target.
    std::vector<std::size_t> inv_start(k * n + 1, 0);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t a = 0; a < k; ++a) ++inv_start[a * n + static_cast<std::size_t>(delta[q * k + a]) + 1];
    for (std::size_t i = 1; i < inv_start.size(); ++i) inv_start[i] += inv_start[i - 1];
    std::vector<State> inv(k * n);
    {
        std::vector<std::size_t> fill(inv_start.begin(), inv_start.end() - 1);
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t a = 0; a < k; ++a)
                inv[fill[a * n + static_cast<std::size_t>(delta[q * k + a])]++] = static_cast<State>(q);
    }

    // Refinable partition: each block is a contiguous range of `elems`.
    std::vector<State> elems(n);
    std::vector<std::size_t> loc(n);
    std::vector<int> blk(n);
    std::vector<std::size_t> bstart, bend, marked;

    std::map<int, std::vector<State>> groups;
    for (std::size_t q = 0; q < n; ++q) groups[initial_class[q]].push_back(static_cast<State>(q));
    std::size_t pos = 0;
    for (auto& [cls, members] : groups) {
        bstart.push_back(pos);
        for (State q : members) {
            elems[pos] = q;
            loc[static_cast<std::size_t>(q)] = pos;
            blk[static_cast<std::size_t>(q)] = static_cast<int>(bstart.size() - 1);
            ++pos;
        }
        bend.push_back(pos);
        marked.push_back(0);
    }

    std::vector<char> in_work(bstart.size() * k, 0);
    std::vector<std::pair<int, std::size_t>> work;
    auto push = [&](int b, std::size_t a) {
        if (in_work.size() < (static_cast<std::size_t>(b) + 1) * k) in_work.resize((static_cast<std::size_t>(b) + 1) * k, 0);
        if (!in_work[static_cast<std::size_t>(b) * k + a]) {
            in_work[static_cast<std::size_t>(b) * k + a] = 1;
            work.emplace_back(b, a);
        }
    };
    {
        std::size_t largest = 0;
        for (std::size_t b = 1; b < bstart.size(); ++b)
            if (bend[b] - bstart[b] > bend[largest] - bstart[largest]) largest = b;
        for (std::size_t b = 0; b < bstart.size(); ++b)
            if (b != largest)
                for (std::size_t a = 0; a < k; ++a) push(static_cast<int>(b), a);
    }

    std::vector<State> splitter;
    std::vector<int> touched;
    while (!work.empty()) {
        auto [b, a] = work.back();
        work.pop_back();
        in_work[static_cast<std::size_t>(b) * k + a] = 0;

        splitter.clear();
        for (std::size_t i = bstart[static_cast<std::size_t>(b)]; i < bend[static_cast<std::size_t>(b)]; ++i) {
            auto q = static_cast<std::size_t>(elems[i]);
            for (std::size_t j = inv_start[a * n + q]; j < inv_start[a * n + q + 1]; ++j) splitter.push_back(inv[j]);
        }
        touched.clear();
        for (State p : splitter) {
            auto up = static_cast<std::size_t>(p);
            auto pb = static_cast<std::size_t>(blk[up]);
            if (marked[pb] == 0) touched.push_back(static_cast<int>(pb));
            std::size_t target = bstart[pb] + marked[pb];
            State other = elems[target];
            std::swap(elems[target], elems[loc[up]]);
            loc[static_cast<std::size_t>(other)] = loc[up];
            loc[up] = target;
            ++marked[pb];
        }
        for (int tb : touched) {
            auto ub = static_cast<std::size_t>(tb);
            std::size_t m = marked[ub];
            marked[ub] = 0;
            std::size_t size = bend[ub] - bstart[ub];
            if (m == size) continue;
            int nb = static_cast<int>(bstart.size());
            bstart.push_back(bstart[ub]);
            bend.push_back(bstart[ub] + m);
            marked.push_back(0);
            bstart[ub] += m;
            for (std::size_t i = bstart[static_cast<std::size_t>(nb)]; i < bend[static_cast<std::size_t>(nb)]; ++i)
                blk[static_cast<std::size_t>(elems[i])] = nb;
            for (std::size_t c = 0; c < k; ++c) {
                if (in_work.size() > ub * k + c && in_work[ub * k + c]) {
                    push(nb, c);
                } else {
                    push(m <= size - m ? nb : tb, c);
                }
            }
        }
    }
    return blk;
}

}  // namespace detail

Automaton minimize(const Automaton& a) {
    const std::size_t k = a.alphabet_size();
    auto order = detail::bfs_order(a.num_states(), k, a.transitions(), a.initial());
    const std::size_t n = order.size();
    std::vector<State> index(a.num_states(), -1);
    for (std::size_t i = 0; i < n; ++i) index[static_cast<std::size_t>(order[i])] = static_cast<State>(i);
    std::vector<State> delta(n * k);
    std::vector<int> cls0(n);
    for (std::size_t i = 0; i < n; ++i) {
        cls0[i] = a.is_accepting(order[i]) ? 1 : 0;
        for (std::size_t c = 0; c < k; ++c) delta[i * k + c] = index[static_cast<std::size_t>(a.next(order[i], static_cast<Letter>(c)))];
    }
    auto cls = detail::refine_partition(n, k, delta, cls0);

    int num_classes = 0;
    for (int c : cls) num_classes = std::max(num_classes, c + 1);
    const auto m = static_cast<std::size_t>(num_classes);
    std::vector<State> rep(m, -1);
    for (std::size_t q = 0; q < n; ++q)
        if (rep[static_cast<std::size_t>(cls[q])] < 0) rep[static_cast<std::size_t>(cls[q])] = static_cast<State>(q);
    std::vector<State> qdelta(m * k);
    std::vector<char> qacc(m);
    for (std::size_t c = 0; c < m; ++c) {
        auto r = static_cast<std::size_t>(rep[c]);
        qacc[c] = static_cast<char>(cls0[r]);
        for (std::size_t l = 0; l < k; ++l) qdelta[c * k + l] = cls[static_cast<std::size_t>(delta[r * k + l])];
    }

    // The rejecting sink (if any) is numbered last.
    State sink = -1;
    for (std::size_t c = 0; c < m && sink < 0; ++c) {
        if (qacc[c]) continue;
        bool loops = true;
        for (std::size_t l = 0; l < k && loops; ++l) loops = qdelta[c * k + l] == static_cast<State>(c);
        if (loops) sink = static_cast<State>(c);
    }
    const State start = cls[0];
    std::vector<State> qorder;
    std::vector<char> seen(m, 0);
    if (start != sink) {
        qorder.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
    }
    if (sink >= 0) seen[static_cast<std::size_t>(sink)] = 1;
    for (std::size_t head = 0; head < qorder.size(); ++head)
        for (std::size_t l = 0; l < k; ++l) {
            State r = qdelta[static_cast<std::size_t>(qorder[head]) * k + l];
            if (!seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = 1;
                qorder.push_back(r);
            }
        }
    if (sink >= 0) qorder.push_back(sink);

    std::vector<State> qindex(m, -1);
    for (std::size_t i = 0; i < qorder.size(); ++i) qindex[static_cast<std::size_t>(qorder[i])] = static_cast<State>(i);
    std::vector<State> out_delta(qorder.size() * k);
    std::vector<char> out_acc(qorder.size());
    for (std::size_t i = 0; i < qorder.size(); ++i) {
        auto c = static_cast<std::size_t>(qorder[i]);
        out_acc[i] = qacc[c];
        for (std::size_t l = 0; l < k; ++l) out_delta[i * k + l] = qindex[static_cast<std::size_t>(qdelta[c * k + l])];
    }
    return Automaton(a.signature(), qindex[static_cast<std::size_t>(start)], std::move(out_delta), std::move(out_acc));
}

}  // namespace autoseq
