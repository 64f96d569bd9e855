#ifndef BORELKIT_MORPHISM_IO_HPP
#define BORELKIT_MORPHISM_IO_HPP

#include <string>
#include <string_view>

#include "borelkit/morphism.hpp"

namespace borelkit {

/// Morphism file (JSON):
///   {"N": 4, "r": 2, "m": 1, "d": [0,0,0,0], "vars": ["s","t"],
///    "entries": [{"i": 1, "j": 2, "p": "s"}, ...]}
/// "m" defaults to 1, "d" is inferred when absent, "vars" renames the
/// variables. Every problem found is reported in one InputError, with entry
/// coordinates where they apply.
struct LoadedMorphism {
  GradedMorphism psi;
  bool d_inferred = false;
};

LoadedMorphism parse_morphism(std::string_view text,
                              GradedMorphism::Grading mode = GradedMorphism::Grading::strict);
LoadedMorphism load_morphism(const std::string& path,
                             GradedMorphism::Grading mode = GradedMorphism::Grading::strict);

std::string morphism_to_json(const GradedMorphism& psi);
void save_morphism(const std::string& path, const GradedMorphism& psi);

/// Verification report as a JSON object; the "morphism" member is the
/// morphism in file format.
std::string report_to_json(const VerificationReport& report, const GradedMorphism& psi);

}  // namespace borelkit

#endif  // BORELKIT_MORPHISM_IO_HPP
