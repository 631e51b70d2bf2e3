#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sato/errors.hpp"
#include "sato/gkm.hpp"
#include "sato/io.hpp"
#include "sato/krichever.hpp"
#include "sato/partition.hpp"
#include "sato/schubert.hpp"
#include "sato/tautological.hpp"
#include "sato/verify.hpp"

using namespace sato;

namespace {

constexpr int kVerifyFailed = 2;

struct MapArgs {
  std::string map;
  int g = 0;
  int q = 0;
  int h = 0;
  bool equivariant = false;
  bool alternate_sign = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--map", map, "kq, k1 or line")->required()->check(CLI::IsMember({"kq", "k1", "line"}));
    cmd->add_option("--g", g, "genus")->required();
    cmd->add_option("--q", q, "order of the differentials (kq)");
    cmd->add_option("--h", h, "degree of the line bundle (line)");
    cmd->add_flag("--equivariant", equivariant, "S^1-equivariant pullback");
    cmd->add_flag("--alternate-sign", alternate_sign, "kq only: inner (-1)^m in the r > d_q formula");
  }

  PullbackMap build() const {
    PullbackMap m;
    if (map == "kq") {
      if (q == 0) throw DomainError("--q is required for --map kq");
      m = PullbackMap::make_kq(q, g, equivariant);
    } else if (map == "k1") {
      m = PullbackMap::make_k1(g, equivariant);
    } else {
      if (h == 0) throw DomainError("--h is required for --map line");
      m = PullbackMap::make_line(g, h, equivariant);
    }
    if (alternate_sign && m.kind != MapKind::kq) throw DomainError("--alternate-sign applies to --map kq only");
    m.kq_alternate_sign = alternate_sign;
    m.validate();
    return m;
  }
};

void print_json(const Json& j) { std::cout << j.dump() << '\n'; }

std::string vertex_str(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void print_table(const GKMClass& c, const std::string& title) {
  std::cout << title << '\n';
  const GKMGraph& g = c.graph();
  for (std::size_t v : g.bruhat_order())
    std::cout << "  " << vertex_str(g.vertices()[v]) << ' ' << g.partition_of(v).str() << ": " << pretty(c.value(v))
              << '\n';
}

GKMClass rotate_if(const GKMClass& c, bool on) { return on ? specialize_rotation(c) : c; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krichever pullbacks, Schubert calculus and tautological classes"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  bool json = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", json, "JSON output");
  app.add_option("--threads", threads, "worker threads for verification")->check(CLI::PositiveNumber);

  MapArgs gen_args;
  int r = 0;
  auto* pullback = app.add_subcommand("pullback", "image of C_r (equivariant) or c_r");
  gen_args.attach(pullback);
  pullback->add_option("--r", r, "index r >= 1")->required();

  MapArgs class_args;
  std::string class_partition;
  auto* pullback_cls = app.add_subcommand("pullback-class", "image of a Schubert class");
  class_args.attach(pullback_cls);
  pullback_cls->add_option("--partition", class_partition, "e.g. \"2,1\"")->required();

  std::string a, b;
  auto* schur = app.add_subcommand("schur-mult", "Littlewood-Richardson product");
  schur->add_option("--a", a)->required();
  schur->add_option("--b", b)->required();

  int n = 0, l = 0;
  std::string lambda_text, product_text;
  bool rotation = false;
  auto* gkm = app.add_subcommand("gkm", "fixed-point restrictions on Gr(l, n)");
  gkm->add_option("--n", n)->required();
  gkm->add_option("--l", l)->required();
  gkm->add_option("--lambda", lambda_text)->required();
  gkm->add_option("--product", product_text, "second partition; prints the product and its u -> 0 limit");
  gkm->add_flag("--rotation", rotation, "substitute u_i -> i u");

  int hq = 0, hg = 0, hr = 0;
  auto* hodge = app.add_subcommand("ch-hodge", "ch_r of the Hodge bundle E_q");
  hodge->add_option("--q", hq)->required();
  hodge->add_option("--g", hg)->required();
  hodge->add_option("--r", hr)->required();

  int k = 0;
  bool compare = false;
  auto* chp = app.add_subcommand("ch-p", "ch_k of the section bundle via GRR");
  chp->add_option("--k", k)->required();
  chp->add_flag("--compare", compare, "diff against the closed formula");

  unsigned bn = 0;
  bool poly = false;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers and polynomials");
  bern->add_option("--n", bn)->required();
  bern->add_flag("--poly", poly, "print B_n(x)");

  std::string suite = "all";
  int max_degree = 8;
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--max-degree", max_degree)->check(CLI::Range(1, 12));

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->add_flag("--json", json, "JSON output");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*pullback) {
      PullbackMap m = gen_args.build();
      if (r < 1) throw DomainError("--r must be at least 1");
      GradedPoly p = pullback_generator(m, r);
      if (json) print_json(to_json(p));
      else std::cout << pretty(p) << '\n';
    } else if (*pullback_cls) {
      PullbackMap m = class_args.build();
      Partition lambda = Partition::parse(class_partition);
      GradedPoly p = pullback_class(m, SchubertClass::basis(lambda));
      if (json) print_json(to_json(p));
      else std::cout << pretty(p) << '\n';
    } else if (*schur) {
      Partition pa = Partition::parse(a), pb = Partition::parse(b);
      SchubertClass x = schubert_product(SchubertClass::basis(pa), SchubertClass::basis(pb));
      if (json) print_json(to_json(x));
      else std::cout << x.str() << '\n';
    } else if (*gkm) {
      if (n < 2 || l < 1 || l >= n) throw DomainError("need 1 <= l < n");
      if (n > 9) throw DomainError("n > 9 is outside the supported range");
      Partition lambda = Partition::parse(lambda_text);
      std::optional<Partition> mu;
      if (!product_text.empty()) mu = Partition::parse(product_text);
      GraphPtr graph = make_gkm_graph(n, l);
      if (!graph->in_box(lambda) || (mu && !graph->in_box(*mu)))
        throw DomainError("partition does not fit in the " + std::to_string(l) + " x " + std::to_string(n - l) + " box");
      GKMClass sigma = equivariant_schubert(graph, lambda);
      if (!mu) {
        GKMClass shown = rotate_if(sigma, rotation);
        if (json) print_json(to_json(shown, &lambda));
        else print_table(shown, "sigma" + lambda.str() + " on Gr(" + std::to_string(l) + "," + std::to_string(n) + ")");
      } else {
        auto basis = schubert_basis(graph);
        GKMClass prod = pointwise_product(sigma, basis[graph->vertex_of(*mu)]);
        GKMClass shown = rotate_if(prod, rotation);
        SchubertClass ordinary = specialize_ordinary(prod, basis);
        if (json) {
          Json out;
          out["product"] = to_json(shown);
          out["ordinary"] = to_json(ordinary);
          print_json(out);
        } else {
          print_table(shown, "sigma" + lambda.str() + " * sigma" + mu->str());
          std::cout << "u -> 0: " << ordinary.str() << '\n';
        }
      }
    } else if (*hodge) {
      if (hr < 0 || hq < 1 || hg < 2) throw DomainError("need r >= 0, q >= 1, g >= 2");
      GradedPoly p = ch_hodge(hr, hq, hg);
      if (json) print_json(to_json(p));
      else std::cout << pretty(p) << '\n';
    } else if (*chp) {
      if (k < (compare ? 1 : 0)) throw DomainError(compare ? "--compare needs k >= 1" : "need k >= 0");
      if (!compare) {
        GradedPoly p = grr_ch_P(k);
        if (json) print_json(to_json(p));
        else std::cout << pretty(p) << '\n';
      } else {
        auto deltas = compare_ch_P(k);
        if (json) {
          Json out = Json::array();
          for (const auto& d : deltas)
            out.push_back({{"i", d.i}, {"j", d.j}, {"expansion", d.expansion.str()}, {"stated", d.stated.str()},
                           {"delta", d.delta().str()}, {"kind", to_string(d.kind)}});
          print_json(out);
        } else {
          std::cout << "expansion: " << pretty(grr_ch_P(k)) << '\n';
          std::cout << "stated:    " << pretty(ch_P_stated(k)) << '\n';
          if (deltas.empty()) std::cout << "no difference\n";
          for (const auto& d : deltas)
            std::cout << "m[" << d.i << "," << d.j << "]: expansion " << d.expansion.str() << ", stated "
                      << d.stated.str() << ", delta " << d.delta().str() << " (" << to_string(d.kind) << ")\n";
        }
      }
    } else if (*bern) {
      if (bn > 200) throw DomainError("n > 200 is outside the supported range");
      if (!poly) {
        Rational v = bernoulli_number(bn);
        if (json) print_json(Json{{"n", bn}, {"value", v.str()}});
        else std::cout << v.str() << '\n';
      } else {
        GradedPoly p(make_table({{"x", 1}}));
        auto coeffs = bernoulli_poly(bn);
        for (unsigned i = 0; i < coeffs.size(); ++i) p.add_term({i}, coeffs[i]);
        if (json) print_json(to_json(p));
        else std::cout << pretty(p) << '\n';
      }
    } else if (*verify_cmd) {
      std::vector<std::string> suites;
      if (suite == "all") {
        for (const auto& s : verify::suite_names())
          if (s != "all") suites.push_back(s);
      } else {
        suites.push_back(suite);
      }
      bool all_ok = true;
      Json report = Json::array();
      for (const auto& s : suites) {
        auto results = verify::run_suite(s, max_degree, threads);
        bool ok = true;
        for (const auto& res : results) {
          ok = ok && res.passed;
          if (json) {
            report.push_back({{"suite", s}, {"check", res.name}, {"passed", res.passed}, {"cases", res.cases},
                              {"detail", res.detail}});
          } else {
            std::cout << "  " << (res.passed ? "PASS" : "FAIL") << ' ' << res.name << " (" << res.cases << " cases)";
            if (!res.detail.empty()) std::cout << ": " << res.detail;
            std::cout << '\n';
          }
        }
        if (!json) std::cout << (ok ? "PASS" : "FAIL") << " suite " << s << '\n';
        all_ok = all_ok && ok;
      }
      if (json) print_json(report);
      return all_ok ? 0 : kVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
