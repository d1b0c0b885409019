#include "metacover/checks.hpp"

#include <algorithm>

#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"

namespace metacover {

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const Inputs& inputs) {
  Json j = Json::object();
  for (const auto& [key, value] : inputs.items()) j[key] = to_json(value);
  return j;
}

Inputs inputs_from_json(const Json& j, const PadicContext& ctx) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "inputs must be an object");
  Inputs inputs;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      inputs.items().emplace_back(key, rational_from_json(value));
    } else if (value.is_array()) {
      inputs.items().emplace_back(key, gl2_from_json(value));
    } else if (value.is_number_integer()) {
      inputs.items().emplace_back(key, mu_from_json(value, ctx));
    } else if (value.is_object()) {
      inputs.items().emplace_back(key, meta_from_json(value, ctx));
    } else {
      throw Error(ErrorCode::ParseError, "cannot read input '" + key + "'");
    }
  }
  return inputs;
}

Outcome compare(const Json& lhs, const Json& rhs) { return Outcome{lhs, rhs, lhs == rhs}; }

Json to_json(const Failure& f) {
  Json j = Json::object();
  j["check"] = f.check;
  j["inputs"] = to_json(f.inputs);
  j["lhs"] = f.lhs;
  j["rhs"] = f.rhs;
  if (!f.message.empty()) j["message"] = f.message;
  return j;
}

namespace {

using Gen = std::function<Inputs(const SampleConfig&, const PadicContext&, std::uint64_t)>;
using Eval = std::function<std::optional<Outcome>(const Inputs&, const PadicContext&)>;

Json mu_list(std::initializer_list<Mu> values) {
  Json arr = Json::array();
  for (const auto& m : values) arr.push_back(m.exp());
  return arr;
}

Mu one(const PadicContext& ctx) { return Mu::one(ctx.n()); }

Rational pow(const Rational& a, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a;
  return r;
}

Rational p_of(const PadicContext& ctx) { return Rational(static_cast<unsigned long>(ctx.p())); }

/// Generators of F^x / (F^x)^n.
std::vector<Rational> class_generators(const PadicContext& ctx) {
  if (ctx.mode() == SymbolMode::Dyadic) return {-1, 2, 5};
  return {p_of(ctx), Rational(static_cast<unsigned long>(ctx.residue_generator()))};
}

MetaElement sample_meta(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
                        std::uint64_t stream) {
  return MetaElement{sample_gl2(cfg, ctx, i, stream), sample_mu(cfg, ctx, i, stream)};
}

Rational rat(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
             std::uint64_t stream) {
  return sample_rational(cfg, ctx, i, stream);
}

int splitting_depth(const SampleConfig& cfg, const PadicContext& ctx) {
  return cfg.splitting_depth > 0 ? cfg.splitting_depth : default_splitting_depth(ctx);
}

std::vector<Check> make_checks() {
  std::vector<Check> c;
  auto add = [&](std::string name, std::string suite, Gen gen, Eval eval) {
    c.push_back(Check{std::move(name), std::move(suite), std::move(gen), std::move(eval)});
  };

  // ---- hilbert ----------------------------------------------------------
  Gen abc = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"a", rat(cfg, ctx, i, 0)}, {"b", rat(cfg, ctx, i, 1)}, {"c", rat(cfg, ctx, i, 2)}};
  };
  Gen ab = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"a", rat(cfg, ctx, i, 0)}, {"b", rat(cfg, ctx, i, 1)}};
  };
  Gen a_only = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"a", rat(cfg, ctx, i, 0)}};
  };

  add("hilbert.bilinear_left", "hilbert", abc, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& b = in.get<Rational>("b");
    const auto& cc = in.get<Rational>("c");
    return std::optional(compare(to_json(hilbert(a * b, cc, ctx)),
                                 to_json(hilbert(a, cc, ctx) * hilbert(b, cc, ctx))));
  });
  add("hilbert.bilinear_right", "hilbert", abc, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& b = in.get<Rational>("b");
    const auto& cc = in.get<Rational>("c");
    return std::optional(compare(to_json(hilbert(a, b * cc, ctx)),
                                 to_json(hilbert(a, b, ctx) * hilbert(a, cc, ctx))));
  });
  add("hilbert.antisymmetry", "hilbert", ab, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& b = in.get<Rational>("b");
    return std::optional(
        compare(to_json(hilbert(a, b, ctx) * hilbert(b, a, ctx)), to_json(one(ctx))));
  });
  add("hilbert.inverse", "hilbert", ab, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& b = in.get<Rational>("b");
    Mu ab_inv = hilbert(a, b, ctx).inv();
    return std::optional(
        compare(mu_list({hilbert(b, a, ctx), hilbert(1 / a, b, ctx), hilbert(a, 1 / b, ctx)}),
                mu_list({ab_inv, ab_inv, ab_inv})));
  });
  add(
      "hilbert.steinberg", "hilbert",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        // Odd trials put a near 1 so that 1 - a has positive valuation.
        Rational a = rat(cfg, ctx, i, 0);
        if (i % 2) a = 1 - a;
        return Inputs{{"a", a}};
      },
      [](const Inputs& in, const PadicContext& ctx) -> std::optional<Outcome> {
        const auto& a = in.get<Rational>("a");
        if (a == 0 || a == 1) return std::nullopt;
        Rational rest = 1 - a;
        return compare(mu_list({hilbert(a, rest, ctx), hilbert(rest, a, ctx)}),
                       mu_list({one(ctx), one(ctx)}));
      });
  add("hilbert.powers", "hilbert", ab, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& b = in.get<Rational>("b");
    Json lhs = Json::array();
    Json rhs = Json::array();
    Mu base = hilbert(a, b, ctx);
    for (unsigned m : {2u, 3u, 5u}) {
      lhs.push_back(mu_list({hilbert(pow(a, m), b, ctx), hilbert(a, pow(b, m), ctx)}));
      rhs.push_back(mu_list({base.pow(m), base.pow(m)}));
    }
    return std::optional(compare(lhs, rhs));
  });
  add("hilbert.unit", "hilbert", a_only, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    return std::optional(compare(mu_list({hilbert(a, 1, ctx), hilbert(1, a, ctx)}),
                                 mu_list({one(ctx), one(ctx)})));
  });
  add("hilbert.minus", "hilbert", a_only, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    return std::optional(
        compare(mu_list({hilbert(a, -a, ctx), hilbert(-a, a, ctx), hilbert(a, a * a, ctx)}),
                mu_list({one(ctx), one(ctx), one(ctx)})));
  });
  add("hilbert.nth_power_kernel", "hilbert", ab, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& x = in.get<Rational>("b");
    Rational an = pow(a, ctx.n());
    return std::optional(compare(Json::array({hilbert(an, x, ctx).exp(), is_nth_power(an, ctx)}),
                                 Json::array({0, true})));
  });
  add(
      "hilbert.nondegeneracy", "hilbert",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        Rational a = rat(cfg, ctx, i, 0);
        if (i % 3 == 0) a = pow(a, ctx.n());
        return Inputs{{"a", a}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        // a is an n-th power iff it pairs trivially with generators of
        // F^x/(F^x)^n; otherwise the constructed witness detects it.
        const auto& a = in.get<Rational>("a");
        bool kernel = true;
        for (const auto& x : class_generators(ctx)) kernel = kernel && hilbert(a, x, ctx).is_one();
        bool power = is_nth_power(a, ctx);
        bool detected = power || !hilbert(a, nondegeneracy_witness(a, ctx), ctx).is_one();
        return std::optional(
            compare(Json::array({power, detected}), Json::array({kernel, true})));
      });
  add("field.valuation_additive", "hilbert", ab, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    const auto& b = in.get<Rational>("b");
    return std::optional(
        compare(valuation(a * b, ctx), valuation(a, ctx) + valuation(b, ctx)));
  });
  add("field.residue_multiplicative", "hilbert", ab,
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& a = in.get<Rational>("a");
        const auto& b = in.get<Rational>("b");
        Json lhs = Json::array();
        Json rhs = Json::array();
        std::uint64_t mod = 1;
        for (unsigned k = 1; k <= 3; ++k) {
          mod *= ctx.p();
          lhs.push_back(unit_residue(a * b, k, ctx));
          rhs.push_back(static_cast<std::uint64_t>(static_cast<unsigned __int128>(
                                                       unit_residue(a, k, ctx)) *
                                                   unit_residue(b, k, ctx) % mod));
        }
        return std::optional(compare(lhs, rhs));
      });
  add("field.nth_power_closure", "hilbert", a_only, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<Rational>("a");
    Rational pn = pow(p_of(ctx), ctx.n());
    return std::optional(
        compare(Json::array({is_nth_power(pow(a, ctx.n()), ctx), is_nth_power(a * pn, ctx)}),
                Json::array({true, is_nth_power(a, ctx)})));
  });
  add(
      "field.mu_group", "hilbert",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"e1", sample_mu(cfg, ctx, i, 0)},
                      {"e2", sample_mu(cfg, ctx, i, 1)},
                      {"e3", sample_mu(cfg, ctx, i, 2)}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& x = in.get<Mu>("e1");
        const auto& y = in.get<Mu>("e2");
        const auto& z = in.get<Mu>("e3");
        return std::optional(compare(
            Json::array({((x * y) * z).exp(), (x * x.inv()).exp(), x.inv().exp(), x.pow(ctx.n()).exp()}),
            Json::array({(x * (y * z)).exp(), 0, (ctx.n() - x.exp()) % ctx.n(), 0})));
      });

  // ---- cocycle ----------------------------------------------------------
  Gen g123 = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"g1", sample_gl2(cfg, ctx, i, 0)},
                  {"g2", sample_gl2(cfg, ctx, i, 1)},
                  {"g3", sample_gl2(cfg, ctx, i, 2)}};
  };
  Gen xg = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"g", sample_gl2(cfg, ctx, i, 0)}, {"x", sample_gl2(cfg, ctx, i, 1)}};
  };

  add("cocycle.identity", "cocycle", g123, [](const Inputs& in, const PadicContext& ctx) {
    const auto& g1 = in.get<GL2>("g1");
    const auto& g2 = in.get<GL2>("g2");
    const auto& g3 = in.get<GL2>("g3");
    return std::optional(
        compare(to_json(cocycle(g1 * g2, g3, ctx) * cocycle(g1, g2, ctx)),
                to_json(cocycle(g1, g2 * g3, ctx) * cocycle(g2, g3, ctx))));
  });
  add("cocycle.conjugate_inverse_pair", "cocycle", xg,
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& g = in.get<GL2>("g");
        const auto& x = in.get<GL2>("x");
        GL2 gi = g.inverse();
        GL2 xi = x.inverse();
        Mu beta = cocycle(x, xi, ctx) * cocycle(gi * xi, x, ctx) * cocycle(g, xi, ctx).inv() *
                  cocycle(x, g * xi, ctx).inv() * cocycle(x, gi * xi, ctx).inv();
        return std::optional(compare(to_json(cocycle(x * gi * xi, x * g * xi, ctx)),
                                     to_json(cocycle(gi, g, ctx) * beta)));
      });
  add("cocycle.lambda_beta", "cocycle", xg, [](const Inputs& in, const PadicContext& ctx) {
    const auto& g = in.get<GL2>("g");
    const auto& x = in.get<GL2>("x");
    GL2 gi = g.inverse();
    GL2 xi = x.inverse();
    Mu lambda = cocycle(x * g, xi, ctx) * cocycle(x, g, ctx) * cocycle(x, xi, ctx).inv();
    Mu beta = cocycle(x, xi, ctx) * cocycle(gi * xi, x, ctx) * cocycle(g, xi, ctx).inv() *
              cocycle(x, g * xi, ctx).inv() * cocycle(x, gi * xi, ctx).inv();
    return std::optional(compare(to_json(lambda * beta),
                                 to_json(cocycle(gi * xi, x, ctx) * cocycle(x, gi * xi, ctx).inv())));
  });
  add(
      "cocycle.inverse_pair", "cocycle",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"g", sample_gl2(cfg, ctx, i, 0)}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& g = in.get<GL2>("g");
        Mu closed = g.c() != 0 ? one(ctx) : hilbert(g.d(), g.a(), ctx);
        return std::optional(compare(
            mu_list({cocycle(g, g.inverse(), ctx), cocycle(g.inverse(), g, ctx),
                     cocycle(GL2::identity(), g, ctx), cocycle(g, GL2::identity(), ctx)}),
            mu_list({closed, closed, one(ctx), one(ctx)})));
      });
  add("cocycle.standard_values", "cocycle", ab, [](const Inputs& in, const PadicContext& ctx) {
    const auto& l1 = in.get<Rational>("a");
    const auto& l2 = in.get<Rational>("b");
    return std::optional(compare(
        mu_list({cocycle(GL2::scalar(l1), GL2::scalar(l2), ctx),
                 cocycle(GL2::u(l1), GL2::u(l2), ctx), cocycle(GL2::u(l1), GL2::scalar(l2), ctx)}),
        mu_list({hilbert(l1, l2, ctx), hilbert(l1, -l2, ctx), hilbert(l1, l2, ctx)})));
  });

  // ---- splitting --------------------------------------------------------
  add(
      "splitting.kappa_homomorphism", "splitting",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        int lambda = splitting_depth(cfg, ctx);
        return Inputs{{"k1", sample_congruence(cfg, ctx, lambda, i, 0)},
                      {"k2", sample_congruence(cfg, ctx, lambda, i, 1)}};
      },
      [](const Inputs& in, const PadicContext& ctx) -> std::optional<Outcome> {
        const auto& k1 = in.get<GL2>("k1");
        const auto& k2 = in.get<GL2>("k2");
        MetaElement lhs = mul(MetaElement{k1, splitting_s(k1, ctx)},
                              MetaElement{k2, splitting_s(k2, ctx)}, ctx);
        GL2 k12 = k1 * k2;
        return compare(to_json(lhs), to_json(MetaElement{k12, splitting_s(k12, ctx)}));
      });

  // ---- group ------------------------------------------------------------
  Gen h1 = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"h", sample_meta(cfg, ctx, i, 0)}};
  };
  Gen h12 = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"h1", sample_meta(cfg, ctx, i, 0)}, {"h2", sample_meta(cfg, ctx, i, 1)}};
  };
  Gen h_lambda = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"h", sample_meta(cfg, ctx, i, 0)}, {"lambda", rat(cfg, ctx, i, 1)}};
  };
  Gen l12 = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"l1", rat(cfg, ctx, i, 0)}, {"l2", rat(cfg, ctx, i, 1)}};
  };
  auto Z = [](const Rational& l, const PadicContext& ctx) {
    return standard_element(StandardKind::Z, l, ctx);
  };
  auto U = [](const Rational& l, const PadicContext& ctx) {
    return standard_element(StandardKind::U, l, ctx);
  };

  add(
      "group.associativity", "group",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"h1", sample_meta(cfg, ctx, i, 0)},
                      {"h2", sample_meta(cfg, ctx, i, 1)},
                      {"h3", sample_meta(cfg, ctx, i, 2)}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& a = in.get<MetaElement>("h1");
        const auto& b = in.get<MetaElement>("h2");
        const auto& d = in.get<MetaElement>("h3");
        return std::optional(compare(to_json(mul(mul(a, b, ctx), d, ctx)),
                                     to_json(mul(a, mul(b, d, ctx), ctx))));
      });
  add("group.inverse", "group", h1, [](const Inputs& in, const PadicContext& ctx) {
    const auto& h = in.get<MetaElement>("h");
    MetaElement hi = inv(h, ctx);
    MetaElement e = identity_element(ctx);
    return std::optional(compare(
        Json::array({to_json(inv_closed_form(h, ctx)), to_json(mul(h, hi, ctx)),
                     to_json(mul(hi, h, ctx)), to_json(inv(hi, ctx))}),
        Json::array({to_json(hi), to_json(e), to_json(e), to_json(h)})));
  });
  add("group.identity_and_centre", "group",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"h", sample_meta(cfg, ctx, i, 0)}, {"eps", sample_mu(cfg, ctx, i, 1)}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& h = in.get<MetaElement>("h");
        MetaElement e = central(in.get<Mu>("eps"));
        MetaElement id = identity_element(ctx);
        return std::optional(compare(
            Json::array({to_json(mul(e, h, ctx)), to_json(mul(id, h, ctx)), to_json(mul(h, id, ctx))}),
            Json::array({to_json(mul(h, e, ctx)), to_json(h), to_json(h)})));
      });
  add("group.scalar_commutation", "group", h_lambda, [Z](const Inputs& in, const PadicContext& ctx) {
    const auto& h = in.get<MetaElement>("h");
    const auto& l = in.get<Rational>("lambda");
    return std::optional(compare(to_json(mul(h, Z(l, ctx), ctx)),
                                 to_json(scale(hilbert(h.det(), l, ctx), mul(Z(l, ctx), h, ctx)))));
  });
  add("group.standard_products", "group", l12, [Z, U](const Inputs& in, const PadicContext& ctx) {
    const auto& l1 = in.get<Rational>("l1");
    const auto& l2 = in.get<Rational>("l2");
    return std::optional(compare(
        Json::array({to_json(mul(Z(l1, ctx), Z(l2, ctx), ctx)),
                     to_json(mul(U(l1, ctx), U(l2, ctx), ctx)), to_json(inv(U(l1, ctx), ctx)),
                     to_json(mul(U(l1, ctx), Z(l2, ctx), ctx))}),
        Json::array({to_json(scale(hilbert(l1, l2, ctx), Z(l1 * l2, ctx))),
                     to_json(scale(hilbert(l1, -l2, ctx), Z(l1 * l2, ctx))),
                     to_json(U(1 / l1, ctx)),
                     to_json(scale(hilbert(l1, l2, ctx), U(l1 * l2, ctx)))})));
  });

  // ---- involution -------------------------------------------------------
  Gen h_alpha = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"h", sample_meta(cfg, ctx, i, 0)}, {"alpha", sample_alpha(cfg, ctx, i, 1)}};
  };
  Gen h12_alpha = [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
    return Inputs{{"h1", sample_meta(cfg, ctx, i, 0)},
                  {"h2", sample_meta(cfg, ctx, i, 1)},
                  {"alpha", sample_alpha(cfg, ctx, i, 2)}};
  };

  add(
      "involution.tau", "involution",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"g1", sample_gl2(cfg, ctx, i, 0)}, {"g2", sample_gl2(cfg, ctx, i, 1)}};
      },
      [](const Inputs& in, const PadicContext&) {
        const auto& g1 = in.get<GL2>("g1");
        const auto& g2 = in.get<GL2>("g2");
        GL2 w0(0, 1, 1, 0);
        return std::optional(compare(
            Json::array({to_json(tau(g1)), to_json(tau(g1)), to_json(tau(tau(g1))),
                         to_json(tau(g1).det()), to_json(tau(g1 * g2))}),
            Json::array({to_json(w0 * g1.transpose() * w0),
                         to_json(GL2::u(g1.det()) * g1.inverse() * GL2::u(1)), to_json(g1),
                         to_json(g1.det()), to_json(tau(g2) * tau(g1))})));
      });
  add("involution.anti_automorphism", "involution", h12,
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& a = in.get<MetaElement>("h1");
        const auto& b = in.get<MetaElement>("h2");
        return std::optional(compare(to_json(sigma(mul(a, b, ctx), ctx)),
                                     to_json(mul(sigma(b, ctx), sigma(a, ctx), ctx))));
      });
  add(
      "involution.on_mu", "involution",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"eps", sample_mu(cfg, ctx, i, 0)}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& eps = in.get<Mu>("eps");
        return std::optional(compare(
            Json::array({to_json(sigma(central(eps), ctx)), to_json(sigma_by_definition(central(eps), ctx))}),
            Json::array({to_json(central(eps.inv())), to_json(central(eps.inv()))})));
      });
  add("involution.sigma_basics", "involution", h1, [](const Inputs& in, const PadicContext& ctx) {
    const auto& h = in.get<MetaElement>("h");
    MetaElement s = sigma(h, ctx);
    return std::optional(compare(
        Json::array({to_json(sigma(s, ctx)), to_json(sigma(inv(h, ctx), ctx)), to_json(s.g),
                     to_json(s.det())}),
        Json::array({to_json(h), to_json(inv(s, ctx)), to_json(tau(h.g)), to_json(h.det())})));
  });
  add("involution.closed_form", "involution", h1, [](const Inputs& in, const PadicContext& ctx) {
    const auto& h = in.get<MetaElement>("h");
    return std::optional(
        compare(to_json(sigma(h, ctx)), to_json(sigma_by_definition(h, ctx))));
  });
  add("involution.alpha_anti_automorphism", "involution", h12_alpha,
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& a = in.get<MetaElement>("h1");
        const auto& b = in.get<MetaElement>("h2");
        const auto& al = in.get<Rational>("alpha");
        return std::optional(
            compare(to_json(sigma_alpha(mul(a, b, ctx), al, ctx)),
                    to_json(mul(sigma_alpha(b, al, ctx), sigma_alpha(a, al, ctx), ctx))));
      });
  add("involution.alpha_basics", "involution", h_alpha,
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& h = in.get<MetaElement>("h");
        const auto& al = in.get<Rational>("alpha");
        MetaElement s = sigma_alpha(h, al, ctx);
        return std::optional(compare(
            Json::array({to_json(sigma_alpha(s, al, ctx)), to_json(s.g), to_json(s.det())}),
            Json::array({to_json(h), to_json(tau(h.g)), to_json(h.det())})));
      });
  add("involution.alpha_twist", "involution", h12_alpha,
      [](const Inputs& in, const PadicContext& ctx) {
        const auto& a = in.get<MetaElement>("h1");
        const auto& b = in.get<MetaElement>("h2");
        const auto& al = in.get<Rational>("alpha");
        MetaElement twisted = scale(phi_alpha(a.g, al, ctx), sigma(a, ctx));
        MetaElement expected_power_case =
            is_nth_power(a.det(), ctx) ? sigma(a, ctx) : sigma_alpha(a, al, ctx);
        return std::optional(compare(
            Json::array({to_json(phi_alpha(a.g * b.g, al, ctx)), to_json(sigma_alpha(a, al, ctx)),
                         to_json(sigma_alpha(a, al, ctx))}),
            Json::array({to_json(phi_alpha(a.g, al, ctx) * phi_alpha(b.g, al, ctx)),
                         to_json(twisted), to_json(expected_power_case)})));
      });
  add("involution.rho", "involution", h12_alpha, [](const Inputs& in, const PadicContext& ctx) {
    const auto& a = in.get<MetaElement>("h1");
    const auto& b = in.get<MetaElement>("h2");
    const auto& al = in.get<Rational>("alpha");
    MetaElement e = identity_element(ctx);
    return std::optional(compare(
        Json::array({to_json(rho_alpha(mul(a, b, ctx), al, ctx)),
                     to_json(rho_alpha(rho_alpha(a, al, ctx), al, ctx)),
                     to_json(rho_alpha(e, al, ctx))}),
        Json::array({to_json(mul(rho_alpha(a, al, ctx), rho_alpha(b, al, ctx), ctx)), to_json(a),
                     to_json(e)})));
  });

  // ---- witness ----------------------------------------------------------
  auto report_outcome = [](const WitnessReport& r) {
    Json lhs = to_json(r.lhs);
    Json rhs = to_json(r.rhs);
    return Outcome{lhs, rhs, r.verified && lhs == rhs};
  };

  add("witness.sigma", "witness", h1, [report_outcome](const Inputs& in, const PadicContext& ctx) {
    return std::optional(report_outcome(witness(in.get<MetaElement>("h"), ctx)));
  });
  add(
      "witness.classify", "witness",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"g", sample_gl2(cfg, ctx, i, 0)}};
      },
      [](const Inputs& in, const PadicContext&) -> std::optional<Outcome> {
        const auto& g = in.get<GL2>("g");
        CanonicalCase cc = classify(g);
        if (cc.tag == CaseTag::Scalar) {
          return compare(to_json(cc.target), to_json(g));
        }
        const GL2& x = *cc.conjugator;
        return compare(Json::array({to_json(conjugate(x, g)), to_json(cc.target.trace()),
                                    to_json(cc.target.det())}),
                       Json::array({to_json(cc.target), to_json(g.trace()), to_json(g.det())}));
      });
  add(
      "witness.diagonal_conjugator", "witness",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"P", sample_gl2(cfg, ctx, i, 1)},
                      {"a", rat(cfg, ctx, i, 0)},
                      {"d", rat(cfg, ctx, i, 1)},
                      {"s1", rat(cfg, ctx, i, 2)},
                      {"s2", rat(cfg, ctx, i, 3)}};
      },
      [](const Inputs& in, const PadicContext& ctx) -> std::optional<Outcome> {
        // Any conjugator onto diag(a, d), including ones with q != 0, can be
        // rescaled to have trivial defect.
        const auto& P = in.get<GL2>("P");
        const auto& a = in.get<Rational>("a");
        const auto& d = in.get<Rational>("d");
        if (a == d) return std::nullopt;
        GL2 target = GL2::diag(a, d);
        GL2 g = P * target * P.inverse();
        GL2 x = GL2::diag(in.get<Rational>("s1"), in.get<Rational>("s2")) * P.inverse();
        GL2 y = normalize_diagonal_conjugator(x, target);
        return compare(Json::array({to_json(conjugate(y, g)), to_json(conjugator_defect(y, target, ctx))}),
                       Json::array({to_json(target), 0}));
      });
  add(
      "witness.jordan_defect", "witness",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"x", sample_gl2(cfg, ctx, i, 1)}, {"b", rat(cfg, ctx, i, 0)}};
      },
      [](const Inputs& in, const PadicContext& ctx) {
        // Conjugator defect onto [[b,1],[0,b]]: <fr, b> if q = 0, <-q^2, b> otherwise.
        const auto& x = in.get<GL2>("x");
        const auto& b = in.get<Rational>("b");
        GL2 target(b, 1, 0, b);
        Mu expected = x.c() == 0 ? hilbert(x.a() * x.d(), b, ctx) : hilbert(-(x.c() * x.c()), b, ctx);
        return std::optional(compare(to_json(conjugator_defect(x, target, ctx)), to_json(expected)));
      });
  add(
      "witness.companion_defect", "witness",
      [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
        return Inputs{{"g", sample_gl2(cfg, ctx, i, 0)}};
      },
      [](const Inputs& in, const PadicContext& ctx) -> std::optional<Outcome> {
        const auto& g = in.get<GL2>("g");
        if (g.c() == 0) return std::nullopt;
        CanonicalCase cc = classify(g);
        return compare(to_json(conjugator_defect(*cc.conjugator, cc.target, ctx)), 0);
      });

  add("witness.alpha", "witness-alpha", h_alpha,
      [report_outcome](const Inputs& in, const PadicContext& ctx) {
        return std::optional(report_outcome(
            witness_alpha(in.get<MetaElement>("h"), in.get<Rational>("alpha"), ctx)));
      });
  add("witness.rho", "rho", h_alpha, [report_outcome](const Inputs& in, const PadicContext& ctx) {
    return std::optional(
        report_outcome(rho_witness(in.get<MetaElement>("h"), in.get<Rational>("alpha"), ctx)));
  });

  return c;
}

std::optional<Outcome> run_guarded(const Check& check, const Inputs& inputs,
                                   const PadicContext& ctx, std::string& message) {
  try {
    return check.evaluate(inputs, ctx);
  } catch (const std::exception& e) {
    message = e.what();
    return Outcome{nullptr, nullptr, false};
  }
}

std::size_t size_of(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t size_of(const Value& v) {
  struct Visitor {
    std::size_t operator()(const Rational& q) const { return size_of(q); }
    std::size_t operator()(const GL2& g) const {
      std::size_t s = 0;
      for (const auto& e : g.entries()) s += size_of(e);
      return s;
    }
    std::size_t operator()(const Mu& m) const { return m.exp(); }
    std::size_t operator()(const MetaElement& h) const { return (*this)(h.g) + h.eps.exp(); }
  };
  return std::visit(Visitor{}, v);
}

std::vector<Rational> simpler_rationals(const Rational& q, const PadicContext& ctx,
                                        bool allow_zero) {
  std::vector<Rational> out;
  if (allow_zero) out.emplace_back(0);
  out.emplace_back(1);
  out.emplace_back(-1);
  if (q != 0) {
    auto v = valuation(q, ctx);
    Integer pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), ctx.p(), static_cast<unsigned long>(v < 0 ? -v : v));
    Rational pow_part = v >= 0 ? Rational(pv) : Rational(Integer(1), pv);
    pow_part.canonicalize();
    out.push_back(q / pow_part);
    out.push_back(sgn(q) * pow_part);
    out.emplace_back(q.get_num());
  }
  return out;
}

std::vector<Value> simpler_values(const Value& v, const PadicContext& ctx) {
  std::vector<Value> out;
  if (const auto* q = std::get_if<Rational>(&v)) {
    for (auto& r : simpler_rationals(*q, ctx, false)) out.emplace_back(std::move(r));
  } else if (const auto* m = std::get_if<Mu>(&v)) {
    out.emplace_back(Mu::one(m->order()));
  } else {
    const GL2& g = std::holds_alternative<GL2>(v) ? std::get<GL2>(v) : std::get<MetaElement>(v).g;
    std::vector<GL2> mats;
    mats.push_back(GL2::identity());
    for (std::size_t k = 0; k < 4; ++k) {
      for (auto& r : simpler_rationals(g.entries()[k], ctx, true)) {
        auto e = g.entries();
        e[k] = r;
        if (e[0] * e[3] - e[1] * e[2] != 0) mats.emplace_back(e[0], e[1], e[2], e[3]);
      }
    }
    if (const auto* h = std::get_if<MetaElement>(&v)) {
      if (!h->eps.is_one()) out.emplace_back(MetaElement{h->g, Mu::one(h->eps.order())});
      for (auto& m : mats) out.emplace_back(MetaElement{std::move(m), h->eps});
    } else {
      for (auto& m : mats) out.emplace_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = make_checks();
  return checks;
}

const Check* find_check(const std::string& name) {
  for (const auto& c : all_checks()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::optional<Failure> confirm_and_shrink(const Check& check, const Inputs& inputs,
                                          const PadicContext& ctx, int max_rounds) {
  Inputs current = inputs_from_json(to_json(inputs), ctx);
  std::string message;
  auto outcome = run_guarded(check, current, ctx, message);
  if (!outcome || outcome->passed) return std::nullopt;

  for (int round = 0; round < max_rounds; ++round) {
    bool improved = false;
    for (auto& [key, value] : current.items()) {
      const std::size_t size = size_of(value);
      for (auto& candidate : simpler_values(value, ctx)) {
        if (size_of(candidate) >= size) continue;
        Inputs trial = current;
        for (auto& item : trial.items()) {
          if (item.first == key) item.second = candidate;
        }
        std::string trial_message;
        auto trial_outcome = run_guarded(check, trial, ctx, trial_message);
        if (trial_outcome && !trial_outcome->passed) {
          value = std::move(candidate);
          outcome = std::move(trial_outcome);
          message = std::move(trial_message);
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return Failure{check.name, std::move(current), outcome->lhs, outcome->rhs, message};
}

bool replay_failure(const Json& failure, const PadicContext& ctx) {
  if (!failure.is_object() || !failure.contains("check") || !failure.contains("inputs")) {
    throw Error(ErrorCode::ParseError, "failure record needs \"check\" and \"inputs\"");
  }
  const Check* check = find_check(failure.at("check").get<std::string>());
  if (check == nullptr) {
    throw Error(ErrorCode::UnknownSuite, "unknown check " + failure.at("check").dump());
  }
  return replay_failure(*check, failure, ctx);
}

bool replay_failure(const Check& check, const Json& failure, const PadicContext& ctx) {
  Inputs inputs = inputs_from_json(failure.at("inputs"), ctx);
  std::string message;
  auto outcome = run_guarded(check, inputs, ctx, message);
  return outcome && !outcome->passed;
}

}  // namespace metacover
