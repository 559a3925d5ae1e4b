#pragma once

#include "autoseq/automaton.hpp"
#include "autoseq/rational.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using ColVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Raised when a counted track admits infinitely many values for some
/// assignment of the free tracks.
class DivergentCount : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// f(x) = v * gamma(x_1) * ... * gamma(x_k) * w over the letters of a
/// (possibly multi-track) signature, exact rationals.
class LinearRepresentation {
public:
    LinearRepresentation() = default;
    LinearRepresentation(TrackSignature signature, RowVector v, std::vector<Matrix> gamma, ColVector w);

    const TrackSignature& signature() const { return signature_; }
    Eigen::Index rank() const { return v_.size(); }
    const RowVector& v() const { return v_; }
    const ColVector& w() const { return w_; }
    const Matrix& gamma(Letter letter) const { return gamma_.at(letter); }
    const std::vector<Matrix>& gammas() const { return gamma_; }

    Rational evaluate(const Word& word) const;
    Rational evaluate(std::span<const std::uint64_t> values) const;
    Rational evaluate(std::uint64_t value) const { return evaluate(std::span<const std::uint64_t>(&value, 1)); }

    /// v * gamma(0) == v, so leading zeros do not matter.
    bool padding_invariant() const;

private:
    TrackSignature signature_;
    RowVector v_;
    std::vector<Matrix> gamma_;
    ColVector w_;
};

/// Counts, for each assignment of `free_tracks`, the assignments of the
/// remaining tracks accepted by `a`. The result has one dimension per live
/// state of the minimal automaton. Throws DivergentCount when some count is
/// infinite.
LinearRepresentation count_linrep(const Automaton& a, const std::vector<std::string>& free_tracks);

/// Representation of f1 - f2 (block diagonal). Free signatures must agree
/// on their systems.
LinearRepresentation subtract(const LinearRepresentation& r1, const LinearRepresentation& r2);

/// Minimal-rank representation of the same function (Schutzenberger
/// reduction: restrict to the span of the reachable row vectors, then do the
/// same for the column vectors). Rank 0 iff the function is identically 0.
LinearRepresentation minimize_schutzenberger(const LinearRepresentation& rep);

void write_linrep(std::ostream& out, const LinearRepresentation& rep);
LinearRepresentation read_linrep(std::istream& in, const std::vector<std::string>& names = {});

}  // namespace autoseq
