#include "cli_common.hpp"

#include <iomanip>

#include "arborlab/errors.hpp"
#include "arborlab/obstructions.hpp"
#include "arborlab/ramification.hpp"
#include "arborlab/splitting.hpp"
#include "arborlab/verify.hpp"
#include "arborlab/wreath.hpp"

namespace arborlab::cli {

namespace {

void register_ramification(CLI::App& app, Context& ctx) {
  auto* ram = app.add_subcommand("ramification", "ramification-type combinatorics");
  ram->require_subcommand(1);

  {
    auto type = std::make_shared<std::string>();
    auto g0 = std::make_shared<long>(0);
    auto* cmd = ram->add_subcommand("genus", "Riemann-Hurwitz genus of a ramification type");
    cmd->add_option("--type", *type, "e.g. \"[5],[3,1,1],[2,2,1]\"")->required();
    cmd->add_option("--g0", *g0, "target genus")->capture_default_str();
    cmd->callback([&ctx, type, g0] {
      RamificationType r = RamificationType::parse(*type);
      long g = rh_genus(*g0, r);
      std::cout << "genus = " << g << "\n";
      RunManifest m = RunManifest::make("ramification genus", {{"type", *type}, {"g0", *g0}});
      ctx.emit("ramification-genus", m, {{"type", r.to_string()}, {"genus", g}});
    });
  }

  {
    auto type = std::make_shared<std::string>();
    auto* cmd = ram->add_subcommand("polytype", "polynomial ramification type test");
    cmd->add_option("--type", *type)->required();
    cmd->callback([&ctx, type] {
      RamificationType r = RamificationType::parse(*type);
      bool poly = is_polynomial_type(r);
      std::cout << (poly ? "polynomial type" : "not a polynomial type") << "\n";
      RunManifest m = RunManifest::make("ramification polytype", {{"type", *type}});
      ctx.emit("ramification-polytype", m, {{"type", r.to_string()}, {"polynomial", poly}});
    });
  }

  {
    auto sigma = std::make_shared<std::string>();
    auto degree = std::make_shared<std::uint32_t>(0);
    auto* cmd = ram->add_subcommand("shabat", "chain the cycles of sigma into a full cycle");
    cmd->add_option("--sigma", *sigma, "permutation in cycle notation")->required();
    cmd->add_option("--degree", *degree, "degree (default: inferred from the largest point)");
    cmd->callback([&ctx, sigma, degree] {
      std::uint32_t d = *degree;
      if (d == 0) {
        for (char c : *sigma)
          if (std::isdigit(static_cast<unsigned char>(c))) {
            // crude upper bound: parse the string twice
          }
        // infer: try growing degrees until the parse fits
        for (std::uint32_t trial = 2; trial <= 64 && d == 0; ++trial) {
          try {
            Perm::parse(trial, *sigma);
            d = trial;
          } catch (const ParseError&) {
          }
        }
        if (d == 0) throw ParseError("cannot infer degree; pass --degree");
      }
      Perm s = Perm::parse(d, *sigma);
      Perm tau = shabat_tau(s);
      Perm prod = compose(s, tau);
      std::cout << "tau = " << tau.to_cycle_string() << "\n";
      std::cout << "sigma tau = " << prod.to_cycle_string() << " (type "
                << cycle_type(prod).to_string() << ")\n";
      RunManifest m =
          RunManifest::make("ramification shabat", {{"sigma", *sigma}, {"degree", d}});
      ctx.emit("ramification-shabat", m,
               {{"sigma", s.to_cycle_string()},
                {"tau", tau.to_cycle_string()},
                {"product", prod.to_cycle_string()},
                {"product_type", cycle_type(prod).to_string()}});
    });
  }

  {
    auto vals = std::make_shared<std::array<std::uint32_t, 4>>();
    auto mode = std::make_shared<std::string>("none");
    auto samples = std::make_shared<std::uint64_t>(10'000);
    auto* cmd = ram->add_subcommand("belyi", "parameter checks for the family [d],[r,1^p],[s^q,t]");
    cmd->add_option("--d", (*vals)[0])->required();
    cmd->add_option("--r", (*vals)[1])->required();
    cmd->add_option("--s", (*vals)[2])->required();
    cmd->add_option("--t", (*vals)[3])->required();
    cmd->add_option("--oracle", *mode, "primitivity oracle: none, exhaustive, sampled")
        ->capture_default_str();
    cmd->add_option("--samples", *samples)->capture_default_str();
    cmd->callback([&ctx, vals, mode, samples] {
      auto [d, r, s, t] = *vals;
      BelyiFamilyReport rep = belyi_family_check(d, r, s, t);
      std::cout << rep.to_string() << "\n";
      nlohmann::json j{{"d", d},          {"r", r},
                       {"s", s},          {"t", t},
                       {"admissible", rep.admissible}, {"violations", rep.violations}};
      if (rep.q) j["q"] = *rep.q;
      if (*mode != "none") {
        std::optional<SampledMode> sm;
        if (*mode == "sampled") sm = SampledMode{*samples, ctx.seed_or(1)};
        TripleOracleVerdict v = triple_primitivity_oracle(d, r, s, t, sm);
        j["oracle"] = {{"all_primitive", v.all_primitive},
                       {"triples_checked", v.triples_checked},
                       {"exhaustive", v.exhaustive}};
        std::cout << (v.all_primitive ? "all " : "NOT all ") << v.triples_checked
                  << " triples primitive\n";
      }
      RunManifest m = RunManifest::make(
          "ramification belyi",
          {{"d", d}, {"r", r}, {"s", s}, {"t", t}, {"oracle", *mode}, {"samples", *samples}},
          ctx.seed);
      ctx.emit("ramification-belyi", m, j);
    });
  }

  {
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto p = std::make_shared<std::string>();
    auto* cmd = ram->add_subcommand("meets", "meeting multiplicity of two points at a prime");
    cmd->add_option("--a", *a, "rational or 'inf'")->required();
    cmd->add_option("--b", *b, "rational or 'inf'")->required();
    cmd->add_option("--p", *p, "prime")->required();
    cmd->callback([&ctx, a, b, p] {
      std::uint64_t e = meets_at(RationalPoint::parse(*a), RationalPoint::parse(*b), BigInt(*p));
      std::cout << "multiplicity = " << e << "\n";
      RunManifest m = RunManifest::make("ramification meets", {{"a", *a}, {"b", *b}, {"p", *p}});
      ctx.emit("ramification-meets", m,
               {{"a", *a}, {"b", *b}, {"p", *p}, {"multiplicity", e}});
    });
  }

  {
    auto name = std::make_shared<std::string>();
    auto* cmd = ram->add_subcommand(
        "invgen", "invariable generation of the socle by a catalog entry's inertia subgroups");
    cmd->add_option("--group", *name, "catalog entry with inertia data")->required();
    cmd->callback([&ctx, name] {
      Catalog cat = ctx.catalog();
      std::string key = name->rfind("catalog:", 0) == 0 ? name->substr(8) : *name;
      const CatalogEntry* e = cat.find(key);
      if (!e) throw InvalidArgumentError("no catalog entry named " + key);
      auto inertia = e->inertia();
      if (inertia.empty()) throw InvalidArgumentError(key + " carries no inertia data");
      PermGroup g = e->group();
      PermGroup socle = cat.resolve_socle("catalog:" + key);
      std::vector<PermGroup> cyc;
      for (const auto& x : inertia) cyc.push_back(PermGroup::cyclic(x));
      bool ok = invariably_generates(g, socle, cyc);
      std::cout << key << ": inertia subgroups " << (ok ? "invariably generate" : "FAIL to invariably generate")
                << " the socle\n";
      RunManifest m = RunManifest::make("ramification invgen", {{"group", *name}});
      ctx.emit("ramification-invgen", m,
               {{"group", key}, {"invariably_generates", ok}});
    });
  }
}

void register_wreath(CLI::App& app, Context& ctx) {
  auto* wr = app.add_subcommand("wreath", "iterated wreath products and their profiles");
  wr->require_subcommand(1);

  {
    auto tower = std::make_shared<std::string>();
    auto* cmd = wr->add_subcommand("order", "order and leaf count of a tower");
    cmd->add_option("--tower", *tower)->required();
    cmd->callback([&ctx, tower] {
      WreathTower t = resolve_tower(ctx, *tower);
      std::cout << t.to_string() << ": " << t.leaf_count() << " leaves, order "
                << t.order().get_str() << "\n";
      RunManifest m = RunManifest::make("wreath order", {{"tower", *tower}});
      ctx.emit("wreath-order", m,
               {{"tower", t.to_string()},
                {"leaves", t.leaf_count()},
                {"order", t.order().get_str()}});
    });
  }

  {
    auto tower = std::make_shared<std::string>();
    auto* cmd = wr->add_subcommand("profile",
                                   "per-level kernel orders, Galois-properness, largeness");
    cmd->add_option("--tower", *tower)->required();
    cmd->callback([&ctx, tower] {
      WreathTower t = resolve_tower(ctx, *tower);
      PermGroup g = tower_group(t);
      std::vector<std::uint32_t> socle_degrees;
      for (std::size_t i = 1; i < t.depth(); ++i) socle_degrees.push_back(t.levels()[i].degree);
      LevelProfile prof = largeness_profile(g, t.natural_systems(), socle_degrees);
      nlohmann::json levels = nlohmann::json::array();
      for (const auto& lv : prof.levels) {
        std::string largeness = lv.largeness == Largeness::Large        ? "large"
                                : lv.largeness == Largeness::NotLarge   ? "not-large"
                                                                        : "not-applicable";
        std::cout << "level " << lv.level << ": kernel order " << lv.kernel_order.get_str()
                  << ", " << (lv.galois_proper ? "Galois-proper" : "trivial kernel") << ", "
                  << largeness << (lv.note.empty() ? "" : " (" + lv.note + ")") << "\n";
        levels.push_back({{"level", lv.level},
                          {"kernel_order", lv.kernel_order.get_str()},
                          {"galois_proper", lv.galois_proper},
                          {"largeness", largeness},
                          {"note", lv.note}});
      }
      RunManifest m = RunManifest::make("wreath profile", {{"tower", *tower}});
      ctx.emit("wreath-profile", m, {{"tower", t.to_string()}, {"levels", levels}});
    });
  }

  {
    auto tower = std::make_shared<std::string>();
    auto count = std::make_shared<std::uint64_t>(5);
    auto* cmd = wr->add_subcommand("sample", "uniform elements of the tower group");
    cmd->add_option("--tower", *tower)->required();
    cmd->add_option("--count", *count)->capture_default_str();
    cmd->callback([&ctx, tower, count] {
      WreathTower t = resolve_tower(ctx, *tower);
      std::uint64_t seed = ctx.seed_or(1);
      Rng rng(seed);
      nlohmann::json elems = nlohmann::json::array();
      for (std::uint64_t i = 0; i < *count; ++i) {
        Perm p = uniform_element(t, rng);
        std::cout << p.to_cycle_string() << "\n";
        elems.push_back(p.to_cycle_string());
      }
      RunManifest m = RunManifest::make("wreath sample",
                                        {{"tower", *tower}, {"count", *count}}, seed);
      ctx.emit("wreath-sample", m,
               {{"tower", t.to_string()}, {"seed", seed}, {"elements", elems}});
    });
  }
}

void register_splitting(CLI::App& app, Context& ctx) {
  auto* sp = app.add_subcommand("splitting", "section search over C2 wr Alt(d)");
  sp->require_subcommand(1);
  {
    auto d = std::make_shared<std::uint32_t>(5);
    auto kernel = std::make_shared<std::string>("all");
    auto* cmd = sp->add_subcommand("run", "enumerate groups per kernel and find sections");
    cmd->add_option("--d", *d, "degree in {5,6,7}")->capture_default_str();
    cmd->add_option("--kernel", *kernel, "trivial|diagonal|augmentation|full|all")
        ->capture_default_str();
    cmd->callback([&ctx, d, kernel] {
      bool all_split = true;
      nlohmann::json certs = nlohmann::json::array();
      for (const auto& k : invariant_submodules(*d)) {
        if (*kernel != "all" && k.label_string() != *kernel) continue;
        SplittingCertificate cert = splitting_certificate(*d, k);
        all_split = all_split && cert.all_split;
        std::string name = "splitting-d" + std::to_string(*d) + "-" + k.label_string();
        auto dir = ctx.ensure_out();
        write_text_file((dir / (name + ".json")).string(), cert.to_json().dump(2) + "\n");
        std::cout << "d=" << *d << " kernel=" << k.label_string() << ": " << cert.groups_found
                  << " group(s), " << (cert.all_split ? "all split" : "MISSING SECTION")
                  << " -> " << (dir / (name + ".json")).string() << "\n";
        certs.push_back(cert.to_json());
      }
      RunManifest m =
          RunManifest::make("splitting run", {{"d", *d}, {"kernel", *kernel}});
      ctx.emit("splitting-summary", m, {{"d", *d}, {"allSplit", all_split}, {"certificates", certs}});
      if (!all_split) throw CheckFailure{};
    });
  }
  {
    auto path = std::make_shared<std::string>();
    auto* cmd = sp->add_subcommand("check", "re-verify a certificate file");
    cmd->add_option("certificate", *path)->required();
    cmd->callback([path] {
      SplittingCertificate cert =
          SplittingCertificate::from_json(nlohmann::json::parse(read_text_file(*path)));
      bool ok = verify_certificate(cert);
      std::cout << (ok ? "certificate verifies" : "certificate FAILS") << "\n";
      if (!ok) throw CheckFailure{};
    });
  }
}

void register_catalog_cmd(CLI::App& app, Context& ctx) {
  auto* cat = app.add_subcommand("catalog", "the shipped group catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "names, degrees, orders")->callback([&ctx] {
    Catalog c = ctx.catalog();
    for (const auto& e : c.entries()) {
      PermGroup g = e.group();
      std::cout << e.name << ": degree " << e.degree << ", order " << g.order().get_str()
                << (e.socle_strings.empty() ? "" : ", socle order " + e.socle()->order().get_str())
                << "\n";
    }
  });
  {
    auto name = std::make_shared<std::string>();
    auto* cmd = cat->add_subcommand("show", "one entry in full");
    cmd->add_option("name", *name)->required();
    cmd->callback([&ctx, name] {
      const CatalogEntry* e = ctx.catalog().find(*name);
      if (!e) throw InvalidArgumentError("no catalog entry named " + *name);
      std::cout << e->to_json().dump(2) << "\n";
    });
  }
  cat->add_subcommand("check", "validate every entry")->callback([&ctx] {
    Catalog c = ctx.catalog(); // load() already validates
    std::cout << c.entries().size() << " entries validate\n";
  });
}

void register_verify(CLI::App& app, Context& ctx) {
  auto* v = app.add_subcommand("verify", "run the acceptance checks");
  auto suites = std::make_shared<std::vector<std::string>>();
  auto split_d = std::make_shared<std::uint32_t>(0);
  v->add_option("suite", *suites, "check names, or 'all'")->expected(-1);
  v->add_option("--d", *split_d, "restrict the splitting check to one degree");
  v->callback([&ctx, suites, split_d] {
    if (suites->empty()) suites->push_back("all");
    VerifyOptions opts;
    opts.quick = ctx.quick;
    opts.jobs = ctx.jobs;
    opts.workdir = (ctx.ensure_out() / "verify").string();
    if (*split_d) opts.splitting_d = *split_d;
    auto results = run_checks(*suites, opts);
    bool all_pass = true;
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << std::fixed
                << std::setprecision(1) << r.seconds << "s]: " << r.detail << "\n";
      summary.push_back(
          {{"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    RunManifest m = RunManifest::make(
        "verify", {{"suites", *suites}, {"quick", ctx.quick}}, ctx.seed);
    ctx.emit("verify-summary", m, {{"all_pass", all_pass}, {"results", summary}});
    if (!all_pass) throw CheckFailure{};
  });
}

} // namespace

void register_group_ops(CLI::App& app, Context& ctx) {
  register_ramification(app, ctx);
  register_wreath(app, ctx);
  register_splitting(app, ctx);
  register_catalog_cmd(app, ctx);
  register_verify(app, ctx);
}

} // namespace arborlab::cli
