#pragma once

#include <string>
#include <vector>

#include "dynkin/diagram.hpp"

namespace dynkin {

/// Cartan matrix of a standard type; node numbering follows the usual
/// figures.
///
///   A_n : 1 - 2 - ... - n
///   B_n : 1 = 2 - 3 - ... - n, node 1 short (n >= 2)
///   C_n : 1 = 2 - 3 - ... - n, node 1 long  (n >= 2)
///   D_n : fork 1,2 on node 3, then 3 - 4 - ... - n (n >= 3)
///   E_n : chain 1-2-3-5-6-...-n with branch node 4 on node 3 (n >= 6)
///   F_4 : 1 - 2 = 3 - 4, nodes 1,2 long
///   G_2 : 1 = 2 triple edge, node 1 long
IntMatrix standard_cartan(char family, int n);

DynkinDiagram standard_diagram(char family, int n);

/// Diagram spec text format, accepted by the CLI and library loaders alike:
///   name=B3 | B3 | B3(mark=3) | name=E6(mark=6)
///   gcm=[[2,-1],[-1,2]] | gcm=[[...]];mark=2 | gcm=[[...]](mark=2)
/// The default mark is the last node.
MarkedDiagram parse_marked_diagram(const std::string& spec);

/// "A1,A1" or "B3(mark=3),A1": two diagram specs joined by a top-level comma.
MarkedPair parse_pair(const std::string& spec);

/// "[1,0,2]" or a LiE-style digit string "102" (all entries <= 9).
std::vector<long long> parse_weight_vector(const std::string& spec, int expected_size = -1);

/// "[x1,...],[y1,...]" for a two-sided weight; either side may be "[]".
std::pair<std::vector<long long>, std::vector<long long>> parse_two_sided(const std::string& spec);

}  // namespace dynkin
