#include "triality/gtriality.hpp"

namespace triality {

TrialityGroup TrialityGroup::make(FiniteGroup g, Perm rho, Perm sigma) {
  const int n = g.order();
  if (rho.size() != n || sigma.size() != n)
    throw CheckError("bad-perm-size", {{"order", n}, {"rho", rho.size()}, {"sigma", sigma.size()}});
  if (!g.is_automorphism(rho)) throw CheckError("not-automorphism", {{"which", "rho"}});
  if (!g.is_automorphism(sigma)) throw CheckError("not-automorphism", {{"which", "sigma"}});
  if (!(sigma * sigma).is_identity()) throw CheckError("bad-s3-relations", {{"relation", "sigma^2"}});
  if (!(rho * rho * rho).is_identity()) throw CheckError("bad-s3-relations", {{"relation", "rho^3"}});
  if (!(sigma * rho == rho * rho * sigma)) throw CheckError("bad-s3-relations", {{"relation", "sigma.rho"}});
  return TrialityGroup{std::move(g), std::move(rho), std::move(sigma)};
}

TrialityGroup TrialityGroup::from_json(const nlohmann::json& j) {
  const int n = j.at("order").get<int>();
  const auto& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw CheckError("bad-shape", {{"field", "table"}});
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw CheckError("bad-shape", {{"field", "table-row"}});
    for (const auto& v : row) t.push_back(v.get<int>() - 1);
  }
  auto perm_of = [&](const char* field) {
    const auto& a = j.at(field);
    std::vector<int> img;
    for (const auto& v : a) img.push_back(v.get<int>() - 1);
    if (static_cast<int>(img.size()) != n) throw CheckError("bad-shape", {{"field", field}});
    return Perm(img);
  };
  return make(FiniteGroup::from_table(n, std::move(t)), perm_of("rho"), perm_of("sigma"));
}

nlohmann::json TrialityGroup::to_json() const {
  const int n = g.order();
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < n; ++b) row.push_back(g.mul(a, b) + 1);
    rows.push_back(std::move(row));
  }
  nlohmann::json jr = nlohmann::json::array(), js = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    jr.push_back(rho(i) + 1);
    js.push_back(sigma(i) + 1);
  }
  return {{"order", n}, {"table", rows}, {"rho", jr}, {"sigma", js}};
}

TrialityCheck check_triality(const TrialityGroup& tg, par::Exec exec) {
  TableCtx ctx(tg);
  auto w = triality_witness(ctx, exec);
  return {!w.has_value(), w};
}

MLoopResult moufang_from_triality(const TrialityGroup& tg, par::Exec exec, bool reverse_scan) {
  TableCtx ctx(tg);
  if (auto w = triality_witness(ctx, exec))
    throw CheckError("not-triality-group", {{"witness", *w + 1}});
  auto m = moufang_of(ctx, exec, reverse_scan);
  return {std::move(m.carrier), std::move(m.loop), std::move(m.section)};
}

std::vector<int> s3_center(const TrialityGroup& tg) { return s3_center_of(TableCtx(tg)); }

TrialityGroup wreath_s3_cubed() {
  FiniteGroup g = FiniteGroup::direct_power(FiniteGroup::symmetric3(), 3);
  const int n = g.order();
  std::vector<int> r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        int x = a * 36 + b * 6 + c;
        r[static_cast<std::size_t>(x)] = b * 36 + c * 6 + a;
        s[static_cast<std::size_t>(x)] = b * 36 + a * 6 + c;
      }
  return TrialityGroup::make(std::move(g), Perm(r), Perm(s));
}

TrialityGroup c4_inversion() {
  FiniteGroup g = FiniteGroup::cyclic(4);
  Perm rho = Perm::identity(4), sigma = g.inversion_perm();
  return TrialityGroup::make(std::move(g), std::move(rho), std::move(sigma));
}

}  // namespace triality
