#pragma once

#include "autoseq/automaton.hpp"
#include "autoseq/linrep.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace autoseq {

class UndefinedName : public std::runtime_error {
public:
    explicit UndefinedName(const std::string& name) : std::runtime_error("undefined name '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class Redefinition : public std::runtime_error {
public:
    explicit Redefinition(const std::string& name) : std::runtime_error("'" + name + "' is already defined") {}
};

struct Entry {
    enum class Status { Candidate, Verified };
    std::variant<Automaton, OutputAutomaton, LinearRepresentation> value;
    Status status = Status::Verified;
};

/// Named relations, DFAOs and linear representations. Entries are immutable
/// and shared, so copying an environment is cheap.
class Environment {
public:
    void define(const std::string& name, Entry entry, bool overwrite = false);
    void define(const std::string& name, Automaton a, bool overwrite = false) { define(name, Entry{std::move(a)}, overwrite); }
    void define(const std::string& name, OutputAutomaton d, bool overwrite = false) { define(name, Entry{std::move(d)}, overwrite); }
    void define(const std::string& name, LinearRepresentation r, bool overwrite = false) {
        define(name, Entry{std::move(r)}, overwrite);
    }

    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    const Entry& entry(const std::string& name) const;
    void erase(const std::string& name) { entries_.erase(name); }

    /// Typed lookups; UndefinedName when missing, std::invalid_argument when
    /// the name holds something else.
    const Automaton& relation(const std::string& name) const;
    const OutputAutomaton& dfao(const std::string& name) const;
    const LinearRepresentation& linrep(const std::string& name) const;

    bool is_verified(const std::string& name) const { return entry(name).status == Entry::Status::Verified; }

    std::vector<std::string> names() const;

    /// One file per name: NAME.txt for relations, words/NAME.txt for DFAOs,
    /// NAME.linrep for linear representations.
    void save(const std::filesystem::path& dir) const;
    /// Loads every entry found in dir (verified status), replacing existing
    /// entries of the same name.
    void load(const std::filesystem::path& dir);

private:
    std::map<std::string, std::shared_ptr<const Entry>> entries_;
};

}  // namespace autoseq
