#include "dyadic/json_io.h"

#include <utility>

namespace dyadic {

nlohmann::json element_to_json(const FieldElement& x) {
  if (x.is_exact_zero()) {
    return {{"val", 0}, {"digits", nlohmann::json::array()}};
  }
  const FieldContext& ctx = x.ctx();
  const int want = 4 * ctx.e() + 4;
  const int have = x.rel_prec();
  auto digits = x.rel_digits(want < have ? want : have);
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return {{"val", x.ord()}, {"digits", digits}};
}

FieldElement element_from_json(const FieldContext& ctx, const nlohmann::json& j) {
  if (j.is_number_integer()) return ctx.from_int(j.get<std::int64_t>());
  if (!j.is_object()) throw InputError("element must be an integer or an object");
  if (!j.contains("val")) throw InputError("element object needs a \"val\"");
  if (!j.at("val").is_number_integer())
    throw InputError("element val must be an integer");
  const std::int64_t val = j.at("val").get<std::int64_t>();
  std::vector<std::uint32_t> digits;
  if (j.contains("digits")) {
    if (!j.at("digits").is_array()) throw InputError("element digits must be an array");
    for (const auto& d : j.at("digits")) {
      if (!d.is_number_integer() && !d.is_number_unsigned())
        throw InputError("element digits must be integers");
      const std::int64_t v = d.get<std::int64_t>();
      if (v < 0) throw InputError("element digits must be nonnegative masks");
      digits.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return ctx.from_digits(val, digits);
}

nlohmann::json lattice_to_json(const BongLattice& L) {
  nlohmann::json a = nlohmann::json::array();
  nlohmann::json r = nlohmann::json::array();
  for (int i = 1; i <= L.rank(); ++i) {
    a.push_back(element_to_json(L.a(i)));
    r.push_back(L.R(i));
  }
  return {{"kind", "bong_literal"}, {"a", std::move(a)}, {"R", std::move(r)}};
}

BongLattice lattice_from_json(const FieldContext& ctx, const nlohmann::json& j) {
  if (j.is_array()) {
    std::vector<FieldElement> diag;
    for (const auto& item : j) diag.push_back(element_from_json(ctx, item));
    return make_bong(ctx, std::move(diag));
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InputError("lattice must be an object with a string kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "H") return hyperbolic_lattice(ctx);
  if (kind == "A22rho") return a22rho_lattice(ctx);
  if (kind == "piA22rho") return pi_a22rho_lattice(ctx);
  if (kind == "unary") {
    if (!j.contains("a")) throw InputError("unary block needs an entry a");
    return unary_lattice(ctx, element_from_json(ctx, j.at("a")));
  }
  if (kind == "bong_literal") {
    if (!j.contains("a") || !j.at("a").is_array() || j.at("a").empty())
      throw InputError("bong_literal needs a nonempty entry array a");
    std::vector<FieldElement> diag;
    for (const auto& item : j.at("a")) diag.push_back(element_from_json(ctx, item));
    return make_bong(ctx, std::move(diag));
  }
  if (kind == "concat") {
    if (!j.contains("blocks") || !j.at("blocks").is_array() || j.at("blocks").empty())
      throw InputError("concat needs a nonempty block array");
    std::vector<FieldElement> diag;
    for (const auto& b : j.at("blocks")) {
      const BongLattice part = lattice_from_json(ctx, b);
      for (int i = 1; i <= part.rank(); ++i) diag.push_back(part.a(i));
    }
    return make_bong(ctx, std::move(diag));
  }
  throw InputError("unknown lattice kind: " + kind);
}

namespace {

int get_int(const nlohmann::json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer())
    throw InputError(std::string(key) + " must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

std::unique_ptr<FieldContext> field_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("field description must be an object");
  if (!j.contains("e") || !j.contains("f"))
    throw InputError("field description needs both \"e\" and \"f\"");
  const int e = get_int(j, "e", 1);
  const int f = get_int(j, "f", 1);
  FieldOptions opts;
  if (j.contains("unram_poly")) {
    if (!j.at("unram_poly").is_array())
      throw InputError("unram_poly must be an array of 0/1 coefficients");
    std::vector<int> bits;
    for (const auto& b : j.at("unram_poly")) {
      if (!b.is_number_integer()) throw InputError("unram_poly entries must be integers");
      bits.push_back(b.get<int>());
    }
    opts.unram_poly = std::move(bits);
  }
  if (j.contains("eis_poly")) {
    if (!j.at("eis_poly").is_array())
      throw InputError("eis_poly must be an array of coefficient arrays");
    std::vector<std::vector<std::int64_t>> coeffs;
    for (const auto& c : j.at("eis_poly")) {
      std::vector<std::int64_t> coords;
      if (c.is_number_integer()) {
        coords.push_back(c.get<std::int64_t>());
      } else if (c.is_array()) {
        for (const auto& t : c) {
          if (!t.is_number_integer())
            throw InputError("eis_poly coordinates must be integers");
          coords.push_back(t.get<std::int64_t>());
        }
      } else {
        throw InputError("eis_poly entries must be integers or integer arrays");
      }
      coeffs.push_back(std::move(coords));
    }
    opts.eis_poly = std::move(coeffs);
  }
  if (j.contains("prec")) opts.prec = get_int(j, "prec", 0);
  if (j.contains("rho")) {
    if (!j.at("rho").is_array()) throw InputError("rho must be an array of residue masks");
    std::vector<std::uint32_t> digits;
    for (const auto& d : j.at("rho")) {
      if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
        throw InputError("rho digits must be nonnegative integers");
      digits.push_back(d.get<std::uint32_t>());
    }
    opts.rho_digits = std::move(digits);
  }
  return make_field(e, f, std::move(opts));
}

nlohmann::json field_to_json(const FieldContext& ctx) {
  std::vector<int> bits;
  for (int i = 0; i <= ctx.f(); ++i)
    bits.push_back(static_cast<int>((ctx.k().poly() >> i) & 1u));
  return {{"e", ctx.e()},
          {"f", ctx.f()},
          {"unram_poly", bits},
          {"eis_poly", ctx.eis_poly_input()},
          {"prec", ctx.prec()}};
}

nlohmann::json val_to_json(const Val& v) {
  if (v.is_integer()) return v.as_integer();
  return v.str();
}

nlohmann::json space_to_json(const SpaceInv& s) {
  return {{"dim", s.dim}, {"det", s.det.id()}, {"hasse", s.hasse}};
}

nlohmann::json invariants_to_json(const BongLattice& L) {
  nlohmann::json r = nlohmann::json::array();
  nlohmann::json alpha = nlohmann::json::array();
  nlohmann::json cls = nlohmann::json::array();
  for (int i = 1; i <= L.rank(); ++i) {
    r.push_back(L.R(i));
    cls.push_back(L.ctx().class_of(L.a(i)).id());
    if (i <= L.rank() - 1) alpha.push_back(val_to_json(L.alpha(i)));
  }
  return {{"rank", L.rank()},
          {"R", std::move(r)},
          {"alpha", std::move(alpha)},
          {"classes", std::move(cls)},
          {"space", space_to_json(L.space())}};
}

nlohmann::json uni_verdict_to_json(const UniVerdict& v) {
  nlohmann::json j = {{"universal", v.universal}, {"method", method_token(v.method)}};
  if (v.witness.empty())
    j["witness"] = nullptr;
  else
    j["witness"] = v.witness;
  return j;
}

nlohmann::json rep_verdict_to_json(const RepVerdict& v) {
  nlohmann::json j = {{"represented", v.represented}};
  if (v.represented)
    j["witness"] = nullptr;
  else
    j["witness"] = {{"condition", v.condition}, {"i", v.index}};
  return j;
}

nlohmann::json testing_set_to_json(const FieldContext& ctx,
                                   const std::vector<TestingEntry>& set) {
  (void)ctx;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& entry : set) {
    arr.push_back({{"nu", entry.nu},
                   {"c", entry.c.id()},
                   {"jordan", entry.jordan},
                   {"bong", lattice_to_json(entry.lattice)}});
  }
  return arr;
}

nlohmann::json crosscheck_to_json(const CrosscheckReport& r) {
  return {{"n", r.n},
          {"count", r.count},
          {"seed", r.seed},
          {"disagreements", r.disagreements},
          {"details", r.details}};
}

}  // namespace dyadic
