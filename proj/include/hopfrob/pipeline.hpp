#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfrob/bundle.hpp"
#include "hopfrob/frob.hpp"

namespace hopfrob {

// Named computed values reported next to the checks, in insertion order.
using Facts = std::vector<std::pair<std::string, std::string>>;

struct CommandResult {
    std::string command;
    std::string input;
    std::string input_digest;
    Report report;
    Facts facts;
};

// FNV-1a of the bundle text for files and of the builtin name for builtins.
std::string input_digest(const std::string& spec);

// Default module samples: all characters for commutative group algebras, else the trivial module.
std::vector<HModule> default_modules(const HopfPtr& k);
// Characters times grouplike degrees for commutative group algebras, else the trivial YD module.
std::vector<YDModule> default_yd_modules(const HopfPtr& k);

CommandResult run_verify(const Document& doc);

struct AnalyzeFlags {
    AnalysisOptions options;
    std::optional<bool> expect_frobenius;
    std::optional<bool> expect_central;
};
CommandResult run_analyze(const HopfInclusion& incl, const AnalyzeFlags& flags = {});

struct FunctorFlags {
    bool frobenius_monoidal = false;
    bool braided = false;
    bool separable = false;
    AnalysisOptions options;
};
// modules: K-modules for the monoidal and separability suites; yd: YD modules over K.
CommandResult run_check_functor(const HopfInclusion& incl, const std::vector<HModule>& modules,
                                const std::vector<YDModule>& yd, const FunctorFlags& flags);

// Object spec: "trivial", "etale:<n>,<ex>,<ey>", "all-etale" or "all" (etale objects only when K = kK).
// Throws InputError when malformed.
CommandResult run_frob_objects(const HopfInclusion& incl, const std::string& spec, const AnalysisOptions& opt = {});

CommandResult run_scan_sl2(int ell);
CommandResult run_cartan_check(const std::vector<std::pair<char, int>>& types, const std::vector<int>& ells);

std::string render_text(const CommandResult& r);
std::string render_json(const CommandResult& r);

}  // namespace hopfrob
