#pragma once

#include <string>

#include "sic/si.hpp"

namespace sic {

// Text layout:
//   sic-witness
//   host <edge list>
//   maps <k>
//   <n labels>            (k lines)
//   claimed <edge list>
std::string serialize_witness(const SiWitness& w);
SiWitness parse_witness(const std::string& text);

}  // namespace sic
