#include "autoseq/environment.hpp"

#include "autoseq/automaton_io.hpp"

#include <fstream>

namespace autoseq {

void Environment::define(const std::string& name, Entry entry, bool overwrite) {
    if (!overwrite && contains(name)) throw Redefinition(name);
    entries_[name] = std::make_shared<const Entry>(std::move(entry));
}

const Entry& Environment::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UndefinedName(name);
    return *it->second;
}

const Automaton& Environment::relation(const std::string& name) const {
    const auto* a = std::get_if<Automaton>(&entry(name).value);
    if (!a) throw std::invalid_argument("'" + name + "' is not a relation");
    return *a;
}

const OutputAutomaton& Environment::dfao(const std::string& name) const {
    const auto* d = std::get_if<OutputAutomaton>(&entry(name).value);
    if (!d) throw std::invalid_argument("'" + name + "' is not an automatic sequence");
    return *d;
}

const LinearRepresentation& Environment::linrep(const std::string& name) const {
    const auto* r = std::get_if<LinearRepresentation>(&entry(name).value);
    if (!r) throw std::invalid_argument("'" + name + "' is not a linear representation");
    return *r;
}

std::vector<std::string> Environment::names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : entries_) out.push_back(name);
    return out;
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return out;
}

}  // namespace

void Environment::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir / "words");
    for (const auto& [name, e] : entries_) {
        if (const auto* a = std::get_if<Automaton>(&e->value)) {
            auto out = open_out(dir / (name + ".txt"));
            write_automaton(out, *a);
            // Track names are not part of the text format.
            auto names = open_out(dir / (name + ".tracks"));
            for (const auto& t : a->signature()) names << t.name << '\n';
        } else if (const auto* d = std::get_if<OutputAutomaton>(&e->value)) {
            auto out = open_out(dir / "words" / (name + ".txt"));
            write_dfao(out, *d);
        } else {
            auto out = open_out(dir / (name + ".linrep"));
            write_linrep(out, std::get<LinearRepresentation>(e->value));
        }
    }
}

void Environment::load(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) return;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        const auto& p = item.path();
        std::string name = p.stem().string();
        if (p.extension() == ".txt") {
            std::vector<std::string> names;
            std::ifstream tracks(std::filesystem::path(p).replace_extension(".tracks"));
            for (std::string line; std::getline(tracks, line);)
                if (!line.empty()) names.push_back(line);
            std::ifstream in(p);
            define(name, read_automaton(in, names), true);
        } else if (p.extension() == ".linrep") {
            std::ifstream in(p);
            define(name, read_linrep(in), true);
        }
    }
    auto words = dir / "words";
    if (std::filesystem::is_directory(words))
        for (const auto& item : std::filesystem::directory_iterator(words))
            if (item.path().extension() == ".txt") {
                std::ifstream in(item.path());
                define(item.path().stem().string(), read_dfao(in), true);
            }
}

}  // namespace autoseq
