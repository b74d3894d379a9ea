#pragma once

#include <random>

#include "surfgrp/word.hpp"

namespace surfgrp::testing {

inline Word random_word(std::mt19937& rng, int genus, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> gen_d(1, 2 * genus);
  std::uniform_int_distribution<int> sign_d(0, 1);
  Word w;
  const int len = len_d(rng);
  for (int i = 0; i < len; ++i)
    w.letters.push_back({gen_d(rng), sign_d(rng) ? 1 : -1});
  return w;
}

}  // namespace surfgrp::testing
