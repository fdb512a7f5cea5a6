#include "stuckknot/catalog.hpp"

#include "stuckknot/error.hpp"

namespace stuckknot {

// Braid closures are stored in canonical form; tests regenerate them.
const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"unknot", "O", "crossing-free circle", "1", "1"},
      {"unlink-2", "O O", "two crossing-free circles", "a*z^-1 - a^-1*z^-1", "-A^2 - A^-2"},
      {"curl-pos", "X[1,2,2,1]", "classical positive curl", "1", "1"},
      {"curl-neg", "X[1,1,2,2]", "classical negative curl", "1", "1"},
      {"rigid-curl-pos", "S[1,2,2,1]", "unknot with one positive stuck crossing",
       "t*a*z^-1 - t*a^-1*z^-1 + r", "R"},
      {"rigid-curl-neg", "S[1,1,2,2]", "unknot with one negative stuck crossing",
       "t*a*z^-1 - t*a^-1*z^-1 + r^-1", "R"},
      {"trefoil", "X[1,4,2,5] X[5,2,6,3] X[3,6,4,1]", "closure of sigma1^3, writhe +3",
       "a^-2*z^2 + 2*a^-2 - a^-4", "A^-4 + A^-12 - A^-16"},
      {"trefoil-left", "X[1,5,2,4] X[5,3,6,2] X[3,1,4,6]", "closure of sigma1^-3", std::nullopt, std::nullopt},
      {"stuck-trefoil", "X[1,4,2,5] X[5,2,6,3] S[3,6,4,1]", "trefoil with one stuck crossing", std::nullopt,
       std::nullopt},
      {"stuck-trefoil-2", "X[1,4,2,5] S[5,2,6,3] S[3,6,4,1]", "trefoil with two stuck crossings", std::nullopt,
       std::nullopt},
      {"hopf", "X[1,4,2,3] X[3,2,4,1]", "closure of sigma1^2", "a^-1*z + a^-1*z^-1 - a^-3*z^-1", std::nullopt},
      {"stuck-hopf", "X[1,4,2,3] S[3,2,4,1]", "Hopf link with one stuck crossing", std::nullopt, std::nullopt},
      {"figure-eight", "X[1,4,2,5] X[7,3,8,2] X[3,7,4,6] X[5,8,6,1]", "closure of (sigma1 sigma2^-1)^2",
       std::nullopt, std::nullopt},
      {"stuck-figure-eight", "X[1,4,2,5] X[7,3,8,2] X[3,7,4,6] S[5,8,6,1]", "figure-eight with one stuck crossing",
       std::nullopt, std::nullopt},
      {"cinquefoil", "X[1,6,2,7] X[7,2,8,3] X[3,8,4,9] X[9,4,10,5] X[5,10,6,1]", "closure of sigma1^5",
       std::nullopt, std::nullopt},
      {"torus-2-7",
       "X[1,8,2,9] X[9,2,10,3] X[3,10,4,11] X[11,4,12,5] X[5,12,6,13] X[13,6,14,7] X[7,14,8,1]",
       "closure of sigma1^7", std::nullopt, std::nullopt},
      {"borromean", "X[1,5,2,8] X[12,2,9,3] X[3,6,4,7] X[10,1,11,4] X[5,10,6,9] X[7,11,8,12]",
       "closure of (sigma1 sigma2^-1)^3", std::nullopt, std::nullopt},
      {"torus-3-4",
       "X[1,6,2,7] X[13,2,14,3] X[8,3,9,4] X[4,15,5,16] X[5,10,6,11] X[12,7,13,8] X[9,14,10,15] X[16,11,1,12]",
       "closure of (sigma1 sigma2)^4", std::nullopt, std::nullopt},
      {"ten-crossing",
       "X[1,8,2,9] X[15,3,16,2] X[3,11,4,10] X[17,4,18,5] X[5,12,6,13] X[19,7,20,6] X[7,15,8,14] X[9,16,10,17] "
       "X[11,19,12,18] X[13,20,14,1]",
       "closure of (sigma1 sigma2^-1)^5", std::nullopt, std::nullopt},
      {"half-rigid-r2", "X[1,2,2,3] S[4,4,1,3]", "unknot whose Reidemeister 2 bigon has one stuck crossing",
       std::nullopt, std::nullopt},
      {"rigid-twists-1", "S[1,2,2,1]", "one rigid twist on an unknot", std::nullopt, "R"},
      {"rigid-twists-2", "S[1,2,2,3] S[3,4,4,1]", "two disjoint rigid twists on an unknot", std::nullopt, "R^2"},
      {"rigid-twists-3", "S[1,2,2,3] S[3,4,4,5] S[5,6,6,1]", "three disjoint rigid twists on an unknot",
       std::nullopt, "R^3"},
  };
  return entries;
}

const CatalogEntry &catalog_entry(std::string_view name) {
  for (const auto &e : catalog())
    if (e.name == name)
      return e;
  throw Error(ErrorKind::UnknownEntry, "no catalog entry '" + std::string(name) + "'");
}

StuckDiagram catalog_diagram(std::string_view name) { return parse(catalog_entry(name).text); }

} // namespace stuckknot
