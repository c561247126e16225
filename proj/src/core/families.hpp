#ifndef HH2_FAMILIES_HPP
#define HH2_FAMILIES_HPP

#include <string>
#include <vector>

#include "core/presentation.hpp"

namespace hh2 {

enum class FamilyId { nakayama, mobius, d_type, d4_t3, d3m_std, e_type, e6_t2, nonstd };

// Parameters follow the derived-equivalence representative catalogue:
// nakayama(s,n), mobius(p,s), D(n,s,t) for t in {1,2}, D4(s,3),
// D3m-std(m, s/3), E(n,s,1) for n in {6,7,8}, E6(s,2), nonstd(m).
struct FamilySpec {
  FamilyId id = FamilyId::nakayama;
  int n = 0, s = 0, m = 0, p = 0, t = 0;
  unsigned long characteristic = 0;

  bool operator==(const FamilySpec& o) const = default;
};

// "D:n=5,s=1,t=2", "D3m-std:m=2,s=1", "nonstd:m=3", "nakayama:s=1,n=2",
// "mobius:p=1,s=1", "E:n=6,s=1,t=2". Does not set the characteristic.
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_str(const FamilySpec& spec);
std::string family_display_name(const FamilySpec& spec);

// Presentation with the catalogue's quiver and relation set, using the paper
// naming transliterated to ASCII and the published path order conventions.
// For D4(s>=2,3) and E6(s>=2,2) the full relation set is emitted and the
// caller is expected to minimalize; all other families emit minimal sets.
Presentation make_family(const FamilySpec& spec);

struct ExpectedDim {
  bool covered = true;
  int value = 0;
};

// dim HH^2 for the family, by the published case analysis.
ExpectedDim expected_hh2(const FamilySpec& spec);

// The regression grid: every family instance with its field characteristic.
std::vector<FamilySpec> acceptance_grid();

}  // namespace hh2

#endif
