#include "autoseq/linrep.hpp"

#include "autoseq/automaton_io.hpp"
#include "autoseq/automaton_ops.hpp"

#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace autoseq {

LinearRepresentation::LinearRepresentation(TrackSignature signature, RowVector v, std::vector<Matrix> gamma, ColVector w)
    : signature_(std::move(signature)), v_(std::move(v)), gamma_(std::move(gamma)), w_(std::move(w)) {
    const auto r = v_.size();
    if (w_.size() != r) throw std::invalid_argument("linear representation: v and w differ in length");
    if (gamma_.size() != signature_.alphabet_size())
        throw std::invalid_argument("linear representation: one matrix per letter expected");
    for (const auto& m : gamma_)
        if (m.rows() != r || m.cols() != r) throw std::invalid_argument("linear representation: matrix has wrong shape");
}

Rational LinearRepresentation::evaluate(const Word& word) const {
    if (rank() == 0) return Rational(0);
    RowVector x = v_;
    for (Letter l : word) x = x * gamma_.at(l);
    return x.dot(w_);
}

Rational LinearRepresentation::evaluate(std::span<const std::uint64_t> values) const {
    if (values.size() != signature_.size()) throw std::invalid_argument("linear representation: wrong number of arguments");
    return evaluate(signature_.encode_values(values));
}

bool LinearRepresentation::padding_invariant() const { return rank() == 0 || v_ * gamma_[0] == v_; }

LinearRepresentation count_linrep(const Automaton& input, const std::vector<std::string>& free_tracks) {
    std::vector<std::string> order = free_tracks;
    std::vector<Track> free;
    for (const auto& name : free_tracks) {
        auto i = input.signature().index_of(name);
        if (!i) throw std::invalid_argument("count: no track named '" + name + "'");
        free.push_back(input.signature()[*i]);
    }
    for (const auto& t : input.signature())
        if (std::find(free_tracks.begin(), free_tracks.end(), t.name) == free_tracks.end()) order.push_back(t.name);
    const Automaton a = minimize(reorder_tracks(input, order));
    TrackSignature free_sig(std::move(free));
    const auto fk = free_sig.alphabet_size();
    const auto ck = a.alphabet_size() / fk;  // free tracks are the high-order digits

    // Dimensions: live states only; a dead state never contributes.
    const auto live = coreachable(a);
    std::vector<Eigen::Index> index(a.num_states(), -1);
    Eigen::Index r = 0;
    for (std::size_t q = 0; q < a.num_states(); ++q)
        if (live[q]) index[q] = r++;
    std::vector<Matrix> gamma(fk, Matrix::Zero(r, r));
    if (r == 0 || index[static_cast<std::size_t>(a.initial())] < 0)
        return LinearRepresentation(free_sig, RowVector(0), std::vector<Matrix>(fk, Matrix(0, 0)), ColVector(0));
    ColVector w = ColVector::Zero(r);
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        if (index[q] < 0) continue;
        if (a.is_accepting(static_cast<State>(q))) w(index[q]) = Rational(1);
        for (Letter f = 0; f < fk; ++f)
            for (Letter c = 0; c < ck; ++c) {
                State to = a.next(static_cast<State>(q), static_cast<Letter>(f * ck + c));
                if (index[static_cast<std::size_t>(to)] >= 0) gamma[f](index[q], index[static_cast<std::size_t>(to)]) += Rational(1);
            }
    }
    // Counted values may be longer than the free values: start from the
    // limit of e_init * gamma(0)^j. The sequence is monotone, and if it has
    // not settled after r + 1 steps some counted value can be pumped.
    RowVector v = RowVector::Zero(r);
    v(index[static_cast<std::size_t>(a.initial())]) = Rational(1);
    bool settled = false;
    for (Eigen::Index step = 0; step <= r + 1; ++step) {
        RowVector next = v * gamma[0];
        if (next == v) {
            settled = true;
            break;
        }
        v = std::move(next);
    }
    if (!settled) throw DivergentCount("count: a counted track is unbounded for some value of the free tracks");
    return LinearRepresentation(std::move(free_sig), std::move(v), std::move(gamma), std::move(w));
}

LinearRepresentation subtract(const LinearRepresentation& r1, const LinearRepresentation& r2) {
    const auto& s1 = r1.signature();
    const auto& s2 = r2.signature();
    bool same = s1.size() == s2.size();
    for (std::size_t i = 0; same && i < s1.size(); ++i) same = s1[i].system == s2[i].system;
    if (!same) throw BaseMismatch("subtract: representations over different number systems");
    const auto a = r1.rank(), b = r2.rank();
    RowVector v(a + b);
    ColVector w(a + b);
    v << r1.v(), r2.v();
    w << r1.w(), -r2.w();
    std::vector<Matrix> gamma;
    for (Letter l = 0; l < s1.alphabet_size(); ++l) {
        Matrix m = Matrix::Zero(a + b, a + b);
        m.topLeftCorner(a, a) = r1.gamma(l);
        m.bottomRightCorner(b, b) = r2.gamma(l);
        gamma.push_back(std::move(m));
    }
    return LinearRepresentation(s1, std::move(v), std::move(gamma), std::move(w));
}

namespace {

/// Incrementally built row-echelon basis of a subspace of Q^n.
class EchelonBasis {
public:
    explicit EchelonBasis(Eigen::Index n) : n_(n) {}

    /// Adds u if it is independent of the current rows; returns whether it
    /// was added.
    bool insert(const RowVector& u) {
        RowVector x = reduce(u);
        Eigen::Index pivot = -1;
        for (Eigen::Index j = 0; j < n_ && pivot < 0; ++j)
            if (!x(j).is_zero()) pivot = j;
        if (pivot < 0) return false;
        x /= x(pivot);
        for (auto& row : rows_)
            if (!row(pivot).is_zero()) row -= row(pivot) * x;
        rows_.push_back(std::move(x));
        pivots_.push_back(pivot);
        return true;
    }

    RowVector reduce(const RowVector& u) const {
        RowVector x = u;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!x(pivots_[i]).is_zero()) x -= x(pivots_[i]) * rows_[i];
        return x;
    }

private:
    Eigen::Index n_;
    std::vector<RowVector> rows_;
    std::vector<Eigen::Index> pivots_;
};

/// Solves c * B = u for c, B with independent rows; u must lie in the row
/// space.
RowVector coordinates(const Matrix& basis, const RowVector& u) {
    const auto k = basis.rows(), n = basis.cols();
    // Gauss-Jordan on [B^T | u^T].
    Matrix aug(n, k + 1);
    aug.leftCols(k) = basis.transpose();
    aug.col(k) = u.transpose();
    Eigen::Index row = 0;
    std::vector<Eigen::Index> pivot_col;
    for (Eigen::Index col = 0; col < k && row < n; ++col) {
        Eigen::Index p = row;
        while (p < n && aug(p, col).is_zero()) ++p;
        if (p == n) continue;
        aug.row(p).swap(aug.row(row));
        aug.row(row) /= aug(row, col);
        for (Eigen::Index i = 0; i < n; ++i)
            if (i != row && !aug(i, col).is_zero()) aug.row(i) -= aug(i, col) * aug.row(row);
        pivot_col.push_back(col);
        ++row;
    }
    for (Eigen::Index i = row; i < n; ++i)
        if (!aug(i, k).is_zero()) throw std::logic_error("coordinates: vector outside the row space");
    RowVector c = RowVector::Zero(k);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) c(pivot_col[i]) = aug(static_cast<Eigen::Index>(i), k);
    return c;
}

/// Restriction to the span of { v * gamma(x) }.
LinearRepresentation reduce_left(const LinearRepresentation& rep) {
    const auto n = rep.rank();
    const auto k = rep.signature().alphabet_size();
    EchelonBasis echelon(n);
    std::vector<RowVector> basis;
    std::deque<RowVector> queue{rep.v()};
    while (!queue.empty()) {
        RowVector u = std::move(queue.front());
        queue.pop_front();
        if (!echelon.insert(u)) continue;
        for (Letter l = 0; l < k; ++l) queue.push_back(u * rep.gamma(l));
        basis.push_back(std::move(u));
    }
    const auto r = static_cast<Eigen::Index>(basis.size());
    if (r == 0) return LinearRepresentation(rep.signature(), RowVector(0), std::vector<Matrix>(k, Matrix(0, 0)), ColVector(0));
    Matrix b(r, n);
    for (Eigen::Index i = 0; i < r; ++i) b.row(i) = basis[static_cast<std::size_t>(i)];
    RowVector v = RowVector::Zero(r);
    v(0) = Rational(1);  // basis[0] is v itself
    std::vector<Matrix> gamma;
    for (Letter l = 0; l < k; ++l) {
        Matrix g(r, r);
        for (Eigen::Index i = 0; i < r; ++i) g.row(i) = coordinates(b, b.row(i) * rep.gamma(l));
        gamma.push_back(std::move(g));
    }
    ColVector w = b * rep.w();
    return LinearRepresentation(rep.signature(), std::move(v), std::move(gamma), std::move(w));
}

LinearRepresentation transpose(const LinearRepresentation& rep) {
    std::vector<Matrix> gamma;
    for (const auto& g : rep.gammas()) gamma.push_back(g.transpose());
    return LinearRepresentation(rep.signature(), rep.w().transpose(), std::move(gamma), rep.v().transpose());
}

}  // namespace

LinearRepresentation minimize_schutzenberger(const LinearRepresentation& rep) {
    return transpose(reduce_left(transpose(reduce_left(rep))));
}

void write_linrep(std::ostream& out, const LinearRepresentation& rep) {
    const auto r = rep.rank();
    out << r << '\n' << rep.signature().systems_line() << '\n';
    auto row = [&](auto&& vec) {
        for (Eigen::Index i = 0; i < vec.size(); ++i) out << (i ? " " : "") << vec(i);
        out << '\n';
    };
    row(rep.v());
    row(rep.w());
    for (Letter l = 0; l < rep.signature().alphabet_size(); ++l) {
        out << '\n';
        auto digits = rep.signature().decode(l);
        for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? " " : "") << digits[i];
        out << '\n';
        for (Eigen::Index i = 0; i < r; ++i) row(rep.gamma(l).row(i));
    }
}

LinearRepresentation read_linrep(std::istream& in, const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> lines;
    for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    std::size_t at = 0;
    auto next = [&]() -> const std::vector<std::string>& {
        if (at >= lines.size()) throw FormatError("linear representation: unexpected end of input");
        return lines[at++];
    };
    const auto& head = next();
    if (head.size() != 1) throw FormatError("linear representation: first line must be the rank");
    const Eigen::Index r = std::stol(head[0]);
    const auto& systems = next();
    auto track_names = names.empty() ? positional_names(systems.size()) : names;
    if (track_names.size() != systems.size()) throw FormatError("linear representation: wrong number of track names");
    std::vector<Track> tracks;
    for (std::size_t i = 0; i < systems.size(); ++i) tracks.push_back(Track{track_names[i], NumberSystem::parse(systems[i])});
    TrackSignature sig(std::move(tracks));
    auto read_row = [&](Eigen::Index len) {
        RowVector x(len);
        const auto& toks = len == 0 ? std::vector<std::string>{} : next();
        if (static_cast<Eigen::Index>(toks.size()) != len) throw FormatError("linear representation: row of wrong length");
        for (Eigen::Index i = 0; i < len; ++i) x(i) = Rational::parse(toks[static_cast<std::size_t>(i)]);
        return x;
    };
    RowVector v = read_row(r);
    ColVector w = read_row(r).transpose();
    std::vector<Matrix> gamma(sig.alphabet_size(), Matrix(r, r));
    std::vector<char> seen(sig.alphabet_size(), 0);
    for (std::size_t l = 0; l < sig.alphabet_size(); ++l) {
        const auto& label = next();
        std::vector<int> digits;
        for (const auto& t : label) digits.push_back(std::stoi(t));
        if (digits.size() != sig.size()) throw FormatError("linear representation: bad letter label");
        Letter letter = sig.encode(digits);
        if (seen[letter]) throw FormatError("linear representation: letter listed twice");
        seen[letter] = 1;
        for (Eigen::Index i = 0; i < r; ++i) gamma[letter].row(i) = read_row(r);
    }
    return LinearRepresentation(std::move(sig), std::move(v), std::move(gamma), std::move(w));
}

}  // namespace autoseq
