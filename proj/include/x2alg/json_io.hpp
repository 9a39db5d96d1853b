#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "x2alg/report.hpp"
#include "x2alg/x2mod.hpp"

namespace x2alg {

// On-disk object formats (canonical JSON, sorted keys, all coefficients
// reduced modulo the prime on load):
//   algebra   {"prime", "dim", "basis": [str], "mul": [[[int]]], "unit": [int]|null}
//   morphism  {"source": algebra|ref, "target": algebra|ref, "matrix": [[int]]}
//   action    {"actor": algebra|ref, "acted": algebra|ref, "act": [[[int]]]}
//   xmod      {"C", "R", "bdry": morphism, "action": action}
//   x2mod     {"L", "M", "P", "d2", "d1", "actPL", "actPM", "lift": [[[int]]]}
//   triple    {"f2": morphism, "f1": morphism, "f0": morphism}
// A `ref` is a string: a path to an algebra file, resolved relative to the
// directory of the referencing file.

enum class ObjectKind { algebra, morphism, action, xmod, x2mod, triple };

const char* kind_name(ObjectKind k);

struct LoadedObject {
    ObjectKind kind;
    std::optional<FiniteAlgebra> algebra;
    std::optional<Morphism> morphism;
    std::optional<Action> action;
    std::optional<PreCrossedModule> xmod;
    std::optional<TwoCrossedModule> x2mod;
    std::optional<TwoCrossedMorphism> triple;
};

// Detects the kind from the distinguishing key and validates via the
// constructors. Malformed JSON raises ParseError naming path and location.
LoadedObject load_object(const std::filesystem::path& file);

// Kind-asserting wrappers; ParseError when the file holds something else.
FiniteAlgebra load_algebra(const std::filesystem::path& file);
Morphism load_morphism(const std::filesystem::path& file);
Action load_action(const std::filesystem::path& file);
PreCrossedModule load_xmod(const std::filesystem::path& file);
TwoCrossedModule load_x2mod(const std::filesystem::path& file);
TwoCrossedMorphism load_triple(const std::filesystem::path& file);

// Canonical serialization: sorted keys, 2-space indent, trailing newline,
// every nested endpoint inlined. Loading then re-emitting is byte-stable.
std::string to_json(const FiniteAlgebra& a);
std::string to_json(const Morphism& f);
std::string to_json(const Action& a);
std::string to_json(const PreCrossedModule& x);
std::string to_json(const TwoCrossedModule& x);
std::string to_json(const TwoCrossedMorphism& t);

std::string report_to_json(const Report& rep);

void write_file(const std::filesystem::path& file, const std::string& content);

} // namespace x2alg
