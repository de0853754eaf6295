#pragma once

#include "ladder/io.hpp"

namespace fixtures {

inline ladder::Ladder l1() {
  return ladder::parse_ascii(
      ".##\n"
      "###\n"
      "###\n"
      "##.\n"
      "##.\n");
}

inline ladder::Ladder l2() {
  return ladder::parse_ascii(
      ".####\n"
      ".####\n"
      ".###.\n"
      "###..\n"
      "###..\n");
}

inline ladder::Ladder l3() {
  return ladder::parse_ascii(
      ".##\n"
      ".##\n"
      "###\n"
      "##.\n"
      "##.\n");
}

}  // namespace fixtures
