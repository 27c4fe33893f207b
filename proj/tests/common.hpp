#pragma once

#include <string>
#include <vector>

#include "lk/group.hpp"
#include "oracle.hpp"

namespace testing {

inline lk::FiniteGroup group(const std::vector<std::string> &gens, int degree) {
  std::vector<lk::Perm> ps;
  for (auto &g : gens) ps.push_back(lk::Perm::parse(g, degree));
  return lk::FiniteGroup::generate(ps);
}

inline oracle::Set to_set(const lk::FiniteGroup &G, const lk::Bits &X) {
  oracle::Set out;
  X.for_each([&](int i) { out.insert(G.perm(i).images); });
  return out;
}

inline oracle::Set whole(const lk::FiniteGroup &G) { return to_set(G, G.all()); }

inline const std::vector<std::string> S4{"(0 1)", "(0 1 2 3)"};
inline const std::vector<std::string> A4{"(0 1 2)", "(0 1)(2 3)"};
inline const std::vector<std::string> A5{"(0 1 2 3 4)", "(0 1 2)"};
inline const std::vector<std::string> SL23{"(2 3 4)(5 7 6)", "(0 2 1 5)(3 4 7 6)"};
inline const std::vector<std::string> S3{"(0 1)", "(0 1 2)"};
inline const std::vector<std::string> PSL27{"(0 1 2 3 4 5 6)", "(2 4)(5 6)"};

} // namespace testing
