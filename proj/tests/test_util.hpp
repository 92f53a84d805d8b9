#pragma once

#include <random>
#include <string>
#include <vector>

#include "liecert/cartan_model.hpp"
#include "liecert/lattice.hpp"
#include "liecert/matrix.hpp"

namespace testutil {

using namespace liecert;

inline ModelPtr plain_model(int n) {
  return std::make_shared<CartanModel>("R^" + std::to_string(n), n, -1,
                                       std::vector<Rat>(static_cast<size_t>(n), Rat(1)));
}

inline ModelPtr sumzero_model(int n) {
  return std::make_shared<CartanModel>("sum-zero R^" + std::to_string(n), n, 0,
                                       std::vector<Rat>(static_cast<size_t>(n), Rat(1)));
}

inline Vec vec(const ModelPtr& m, const std::vector<long>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return Vec(m, std::move(c));
}

inline Vec vecq(const ModelPtr& m, const std::vector<std::string>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const std::string& s : v) c.push_back(parse_rat(s));
  return Vec(m, std::move(c));
}

inline IntMatrix imat(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

inline Rat random_rat(std::mt19937_64& rng, int num_max = 6) {
  std::uniform_int_distribution<int> num(-num_max, num_max);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rat(Int(num(rng)), Int(den(rng)));
}

inline Vec random_model_vec(std::mt19937_64& rng, const ModelPtr& m, int num_max = 6) {
  int k = m->ambient_dim();
  std::vector<Rat> c(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = random_rat(rng, num_max);
  if (m->sum_zero()) {
    int s = m->sum_zero_from();
    Rat total = 0;
    for (int i = s; i < k; ++i) total += c[static_cast<size_t>(i)];
    Rat mean = total / Rat(k - s);
    for (int i = s; i < k; ++i) c[static_cast<size_t>(i)] -= mean;
  }
  return Vec(m, std::move(c));
}

}  // namespace testutil
