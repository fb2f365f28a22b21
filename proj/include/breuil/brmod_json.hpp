#ifndef BREUIL_BRMOD_JSON_HPP
#define BREUIL_BRMOD_JSON_HPP

// Text form of concrete objects. Ring elements are sparse lists of
// [degree, dlog] pairs over the distinguished generator of E; the field
// realization is echoed so a reader can rebuild E exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "breuil/brmod.hpp"

namespace breuil {

inline constexpr int kBrModFormatVersion = 1;

inline nlohmann::json params_to_json(const Params& P) {
  return nlohmann::json{{"p", P.p()},
                        {"r", P.r()},
                        {"n", P.n()},
                        {"e", P.e()},
                        {"modulus", P.field().modulus()},
                        {"generator_code", P.field().generator_code()}};
}

inline nlohmann::json relem_to_json(const RElem& s) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t j = 0; j < s.c.size(); ++j)
    if (!s.c[j].is_zero()) out.push_back({static_cast<long long>(j), s.c[j].log});
  return out;
}

inline RElem relem_from_json(const ChainRing& R, const nlohmann::json& j) {
  RElem out = R.zero();
  if (!j.is_array()) throw Error("ring element must be a list of [degree, dlog] pairs");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw Error("ring element term must be [degree, dlog]");
    long long deg = term[0].get<long long>();
    long long lg = term[1].get<long long>();
    if (deg < 0 || deg >= R.length()) throw Error("degree out of range");
    if (lg < 0 || lg >= static_cast<long long>(R.field().unit_order())) throw Error("dlog out of range");
    out.c[deg] = R.field().add(out.c[deg], FF{static_cast<std::uint32_t>(lg)});
  }
  return out;
}

inline nlohmann::json rvec_to_json(const RVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : v) out.push_back(relem_to_json(s));
  return out;
}

inline RVec rvec_from_json(const ChainRing& R, const nlohmann::json& j, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d) throw Error("vector has wrong length");
  RVec out;
  for (const auto& s : j) out.push_back(relem_from_json(R, s));
  return out;
}

/// Matrices are written as a list of rows.
inline nlohmann::json rmat_to_json(const RMat& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(relem_to_json(m.at(i, j)));
    out.push_back(row);
  }
  return out;
}

inline RMat rmat_from_json(const ChainRing& R, const nlohmann::json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw Error("matrix has wrong row count");
  RMat out = R.zero_mat(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw Error("matrix row has wrong length");
    for (int c = 0; c < cols; ++c) out.at(i, c) = relem_from_json(R, j[i][c]);
  }
  return out;
}

inline nlohmann::json to_json(const ChainRing& R, const BrModDD& M) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < M.comp.size(); ++i) {
    const auto& c = M.comp[i];
    nlohmann::json fil = nlohmann::json::array(), img = nlohmann::json::array();
    for (const auto& g : c.fil_gens) fil.push_back(rvec_to_json(g));
    for (const auto& g : c.phi_on_gens) img.push_back(rvec_to_json(g));
    comps.push_back({{"index", i},
                     {"fil_gens", fil},
                     {"phi_on_gens", img},
                     {"n_mat", rmat_to_json(c.n_mat)},
                     {"g_mat", rmat_to_json(c.g_mat)}});
  }
  return nlohmann::json{{"format", "breuil-brmod"},
                        {"version", kBrModFormatVersion},
                        {"params", params_to_json(R.params())},
                        {"kappa", M.kappa},
                        {"d", M.d},
                        {"components", comps}};
}

/// Inverse of to_json; the echoed field realization must match R.
inline BrModDD brmod_from_json(const ChainRing& R, const nlohmann::json& j) {
  try {
    if (j.at("format") != "breuil-brmod") throw Error("not a serialized Breuil module");
    if (j.at("version").get<int>() != kBrModFormatVersion) throw Error("unsupported format version");
    if (j.at("params") != params_to_json(R.params())) throw Error("field realization does not match");
    BrModDD M;
    M.kappa = j.at("kappa").get<int>();
    M.d = j.at("d").get<int>();
    const auto& comps = j.at("components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != R.params().r())
      throw Error("wrong number of components");
    for (const auto& cj : comps) {
      BrComponent c;
      for (const auto& g : cj.at("fil_gens")) c.fil_gens.push_back(rvec_from_json(R, g, M.d));
      for (const auto& g : cj.at("phi_on_gens")) c.phi_on_gens.push_back(rvec_from_json(R, g, M.d));
      c.n_mat = rmat_from_json(R, cj.at("n_mat"), M.d, M.d);
      c.g_mat = rmat_from_json(R, cj.at("g_mat"), M.d, M.d);
      M.comp.push_back(std::move(c));
    }
    check_dims(R, M);
    return M;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed Breuil module text: ") + ex.what());
  }
}

}  // namespace breuil

#endif  // BREUIL_BRMOD_JSON_HPP
