#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfrob/yd.hpp"

namespace hopfrob {

// Malformed input; line and column are 1-based, 0 when not tied to a position.
struct InputError : std::runtime_error {
    std::string source;
    int line = 0;
    int column = 0;
    InputError(std::string src, int ln, int col, const std::string& msg);
};

// Text bundle: a sequence of blocks, each closed by END.  Lines starting with '#' are comments.
//
//   HOPF <name>                      INCLUSION <name>           MODULE <name>
//   DIM <n>                          SMALL <hopf name>          OVER <hopf name>
//   CONDUCTOR <N>                    LARGE <hopf name>          DIM <d>
//   LABELS <l_0> ... <l_n-1>         EMBED                      ACTION <label>
//   CONVENTION <tag>                 (i,a) c  ; iota(k_a) has c h_i   (i,j) c  ; matrix entry
//   MULT     (i,j,k) c  ; e_i e_j has c e_k                      COACTION
//   COMULT   (i,j,k) c  ; Delta(e_i) has c e_j (x) e_k           (h,i,j) c  ; delta(v_j) has c h (x) v_i
//   UNIT     (i) c
//   COUNIT   (i) c
//   ANTIPODE (i,j) c    ; S(e_i) has c e_j
//
// MODULE blocks may give ACTION on a generating subset of labels only.  Scalars use
// z for zeta_N of the block's conductor (the OVER algebra's conductor for modules).
struct Document {
    std::vector<HopfPtr> hopfs;
    std::vector<HopfInclusion> inclusions;
    std::vector<HModule> modules;
    std::vector<YDModule> yd_modules;  // modules that carried a COACTION section

    HopfPtr find_hopf(const std::string& name) const;
};

Document parse_document(std::string_view text, const std::string& source = "<input>");
std::string write_hopf(const FinHopf& h);
std::string write_inclusion(const HopfInclusion& incl);  // both algebras, then the inclusion
std::string write_module(const HModule& m, const Matrix* coaction = nullptr);

// Builtins: builtin:h8, builtin:klein, builtin:cyclic?n=N, builtin:group?table=0,1;1,0,
// builtin:taft?l=L[&q=Q], builtin:uqsl2?l=L&sub=cartan|borel+|borel-|full,
// builtin:double?of=c2|klein|cyclic3|h8|<bundle path>.  Anything else is read as a bundle file.
Document load_input(const std::string& spec);

}  // namespace hopfrob
