#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hforge/assembly.hpp"
#include "hforge/characters.hpp"
#include "hforge/finite_group.hpp"
#include "hforge/ring.hpp"

namespace hforge {

/// Stored data for a group handled by D = D0(1+g) + D1(1-g):
/// E = <g, b> ~ C_2^2 and blocks A_u keyed by "u1u2", with u1 the sign of g
/// and u2 the sign of b, so D0 = A_00(1+b) + A_01(1-b), D1 = A_10(1+b) + A_11(1-b).
struct FinalFixture {
  std::string name;
  std::string id;          // catalog id, when the group has a well-known one
  std::string group_expr;  // builder expression
  FiniteGroup group;
  ElemAbelianEmbedding e;  // basis (g, b)
  std::vector<RingElement> blocks;
  std::vector<RingElement> stated_supports;  // claimed supports of D0(1+g) and D1(1-g), may be empty

  Element central() const { return e.basis[0]; }
  RingElement d0() const;
  RingElement d1() const;
};

/// Line format: name/id/group/basis/block <u> <expr>/support0/support1.
FinalFixture parse_fixture(std::istream& in, const std::string& source = "<fixture>");
FinalFixture load_fixture(const std::string& path);
/// Every *.txt fixture in a directory, sorted by file name.
std::vector<FinalFixture> load_fixture_dir(const std::string& dir);

struct WeakConditions {
  bool principal_pair = false;       // A_0j chi_0j A_0j^(-1) = |G|/16 chi_0j for j = 0, 1
  bool complementary_pair = false;   // A_10 chi_10 A_10^(-1) + A_11 chi_11 A_11^(-1) = |G|/16 (chi_10 + chi_11)
};
WeakConditions weak_conditions(const FinalFixture& f);

/// Runs original_final_assemble on the stored data.
RingElement fixture_difference_set(const FinalFixture& f);

}  // namespace hforge
