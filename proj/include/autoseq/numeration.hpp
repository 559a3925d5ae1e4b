#pragma once

#include "autoseq/automaton.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace autoseq {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

bool holds(Relation rel, std::int64_t lhs, std::int64_t rhs);
std::string_view symbol(Relation rel);

/// sum(coefficient * variable) + constant REL 0, all variables in one
/// numeration system. A variable may appear more than once; its
/// coefficients are added.
struct AffineAtom {
    std::vector<std::pair<std::int64_t, std::string>> terms;
    std::int64_t constant = 0;
    Relation relation = Relation::Eq;
    NumberSystem system;

    /// Direct integer evaluation; `values` is indexed like the sorted,
    /// de-duplicated variable list returned by variables().
    bool evaluate(const std::vector<std::uint64_t>& values) const;
    std::vector<std::string> variables() const;
};

/// x + y = z over tracks named by `names` (default x, y, z).
Automaton build_add(NumberSystem system, const std::vector<std::string>& names = {"x", "y", "z"});

/// x REL y over tracks x, y.
Automaton build_compare(Relation rel, NumberSystem system);

/// c * x = y over tracks x, y, built by a doubling chain of adders.
Automaton build_const_mul(std::uint64_t c, NumberSystem system);

/// Single track accepting exactly the value v.
Automaton build_constant(std::uint64_t v, NumberSystem system, const std::string& name);

/// Automaton for an affine atom over its variables (sorted by name). Reads
/// the digit tuples most significant first and tracks the partial value of
/// sum(coefficient * prefix); values beyond the bound where the sign can no
/// longer change collapse into two absorbing states.
Automaton compile_atom(const AffineAtom& atom);

/// The same relation assembled from build_const_mul, build_add and
/// build_compare with temporaries projected away. Slower; kept as an
/// independent construction for cross-checking compile_atom.
Automaton compile_atom_by_composition(const AffineAtom& atom);

struct RegexSpec {
    std::string name;
    std::vector<std::string> systems;
    std::string pattern;
};

/// The named regular relations used by the theorem corpus.
const std::vector<RegexSpec>& corpus_regex_specs();
std::map<std::string, Automaton> corpus_regex_automata();

}  // namespace autoseq
