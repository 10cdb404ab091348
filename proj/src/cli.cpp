#include "lkb/cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "lkb/counterexample.hpp"
#include "lkb/serialize.hpp"
#include "lkb/tower.hpp"

namespace lkb::cli {

namespace {

constexpr int kMaxStrands = 64;
constexpr int kMaxLayerFlag = 40;
constexpr long kMaxBasisSize = 1000000;

// --ring theta | layer:R
struct RingChoice {
  bool is_theta = true;
  int layer = 0;
};

RingChoice parse_ring(const std::string& s) {
  if (s == "theta") return {true, 0};
  if (s.rfind("layer:", 0) == 0) {
    size_t used = 0;
    int r;
    try {
      r = std::stoi(s.substr(6), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad ring '" + s + "'");
    }
    if (used != s.size() - 6 || r < 2 || r > kMaxLayerFlag)
      throw std::invalid_argument("bad ring '" + s + "'");
    return {false, r};
  }
  throw std::invalid_argument("bad ring '" + s + "' (expected theta or layer:R)");
}

std::string ring_label(const RingChoice& rc) {
  return rc.is_theta ? "theta" : "layer:" + std::to_string(rc.layer);
}

void require_strands(int n) {
  if (n < 3 || n > kMaxStrands)
    throw std::invalid_argument("n must be between 3 and " +
                                std::to_string(kMaxStrands));
}

Json report_to_json(const Report& rep, const char* item_field,
                    const char* list_field) {
  Json out;
  out[list_field] = Json::array();
  for (const auto& item : rep.items) {
    Json j;
    j[item_field] = item.name;
    j["pass"] = item.pass;
    out[list_field].push_back(std::move(j));
  }
  out["all_pass"] = rep.all_pass();
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

int cmd_gen(int n, int i, const RingChoice& rc, const std::string& format,
            std::ostream& out) {
  require_strands(n);
  RepMatrix a = rc.is_theta ? sigma_matrix(n, i) : layer_sigma(n, i, rc.layer);
  if (format == "latex")
    out << matrix_to_latex(a);
  else
    out << dump_json(matrix_to_json(a));
  return 0;
}

int cmd_word(int n, const std::string& text, const RingChoice& rc,
             std::ostream& out) {
  require_strands(n);
  RepMatrix a = word_matrix(parse_braid_word(n, text));
  if (!rc.is_theta)
    a = matrix_map(RingMorphism(make_layer(rc.layer).from_theta), a);
  out << dump_json(matrix_to_json(a));
  return 0;
}

int cmd_verify(int n, const RingChoice& rc, std::ostream& out) {
  require_strands(n);
  Report rep =
      rc.is_theta
          ? verify_braid_relations(n)
          : verify_braid_relations(
                n, [&](int i) { return layer_sigma(n, i, rc.layer); });
  Json j;
  j["n"] = n;
  j["ring"] = ring_label(rc);
  Json body = report_to_json(rep, "relation", "relations");
  j["relations"] = body["relations"];
  j["all_pass"] = body["all_pass"];
  out << dump_json(j);
  return rep.all_pass() ? 0 : 1;
}

int cmd_eq(int n, const std::string& w1, const std::string& w2,
           std::ostream& out) {
  require_strands(n);
  bool equal = braid_equal(parse_braid_word(n, w1), parse_braid_word(n, w2));
  Json j;
  j["n"] = n;
  j["w1"] = w1;
  j["w2"] = w2;
  j["equal"] = equal;
  out << dump_json(j);
  return equal ? 0 : 1;
}

int cmd_rank(int n, int k, std::ostream& out) {
  if (n < 2 || n > kMaxStrands)
    throw std::invalid_argument("n must be between 2 and " +
                                std::to_string(kMaxStrands));
  if (k < 0 || k > 32) throw std::invalid_argument("k must be between 0 and 32");
  Int count = binomial(n + k - 2, k);
  if (count > kMaxBasisSize)
    throw std::invalid_argument("basis too large to materialize");
  std::vector<BasisKey> basis = enumerate_basis(n, k);
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["rank"] = static_cast<long long>(basis.size());
  j["basis"] = Json::array();
  for (const auto& b : basis) j["basis"].push_back(b);
  out << dump_json(j);
  return 0;
}

int cmd_tower_check(int n, int rmax, std::ostream& out) {
  require_strands(n);
  if (rmax < 3 || rmax > kMaxLayerFlag)
    throw std::invalid_argument("rmax must be between 3 and " +
                                std::to_string(kMaxLayerFlag));
  Report rep = check_tower(n, rmax);
  Json j;
  j["n"] = n;
  j["rmax"] = rmax;
  Json body = report_to_json(rep, "check", "checks");
  j["checks"] = body["checks"];
  j["all_pass"] = body["all_pass"];
  out << dump_json(j);
  return rep.all_pass() ? 0 : 1;
}

int cmd_lcs(const std::string& preset, int depth, std::ostream& out) {
  if (depth < 1 || depth > kMaxLayerFlag)
    throw std::invalid_argument("depth must be between 1 and " +
                                std::to_string(kMaxLayerFlag));
  GroupPtr g;
  if (preset == "zxz")
    g = make_group(1, {}, {{-1}}, 0);
  else if (preset == "theta")
    g = theta_group();
  else {
    RingChoice rc = parse_ring(preset);
    if (rc.is_theta)
      g = theta_group();
    else
      g = make_layer(rc.layer).group;
  }
  Json j;
  j["preset"] = preset;
  j["depth"] = depth;
  j["group"] = descriptor_to_json(*g);
  j["layers"] = Json::array();
  for (int d = 1; d <= depth; ++d) {
    Json layer;
    layer["j"] = d;
    layer["lattice"] = Json::array();
    for (const auto& col : lcs_layer(*g, d)) layer["lattice"].push_back(col);
    j["layers"].push_back(std::move(layer));
  }
  int cls = nilpotency_class(*g, depth);
  if (cls == kNilpotencyExceedsDepth)
    j["nilpotency_class"] = "exceeds max_depth";
  else
    j["nilpotency_class"] = cls;
  out << dump_json(j);
  return 0;
}

int cmd_counterexample(int rmax, std::ostream& out) {
  if (rmax < 3 || rmax > kMaxLayerFlag)
    throw std::invalid_argument("rmax must be between 3 and " +
                                std::to_string(kMaxLayerFlag));
  CxReport rep = cx_certificate(rmax);
  Json j;
  j["rmax"] = rep.r_max;
  j["layers"] = Json::array();
  for (const auto& layer : rep.layers) {
    Json l;
    l["r"] = layer.r;
    l["support_size"] = layer.support_size;
    l["compatible"] = layer.compatible;
    j["layers"].push_back(std::move(l));
  }
  j["all_compatible"] = rep.all_compatible;
  j["sizes_strictly_increasing"] = rep.sizes_strictly_increasing;
  j["conclusion"] = rep.conclusion;
  out << dump_json(j);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact braid matrices over the three-variable ring and its "
               "nilpotent quotient tower"};
  app.require_subcommand(1);

  int n = 0, i = 0, k = 0, rmax = 0, depth = 0;
  std::string ring = "theta", format = "json", w1, w2, preset;

  auto* gen = app.add_subcommand("gen", "generator matrix");
  gen->add_option("--n", n)->required();
  gen->add_option("--i", i)->required();
  gen->add_option("--ring", ring);
  gen->add_option("--format", format)
      ->check(CLI::IsMember({"json", "latex"}));

  auto* word = app.add_subcommand("word", "braid word matrix");
  word->add_option("--n", n)->required();
  word->add_option("word", w1)->required();
  word->add_option("--ring", ring);

  auto* verify = app.add_subcommand("verify", "check braid relations");
  verify->add_option("--n", n)->required();
  verify->add_option("--ring", ring);

  auto* eq = app.add_subcommand("eq", "decide braid word equality");
  eq->add_option("--n", n)->required();
  eq->add_option("w1", w1)->required();
  eq->add_option("w2", w2)->required();

  auto* rank = app.add_subcommand("rank", "basis enumeration");
  rank->add_option("--n", n)->required();
  rank->add_option("--k", k)->required();

  auto* tower = app.add_subcommand("tower-check", "verify the quotient tower");
  tower->add_option("--n", n)->required();
  tower->add_option("--rmax", rmax)->required();

  auto* lcs = app.add_subcommand("lcs", "lower central series of a preset group");
  lcs->add_option("--preset", preset)->required();
  lcs->add_option("--depth", depth)->required();

  auto* cx = app.add_subcommand("counterexample",
                                "non-liftability certificate for the tower");
  cx->add_option("--rmax", rmax)->required();

  std::vector<const char*> argv;
  argv.push_back("lkb3");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) return cmd_gen(n, i, parse_ring(ring), format, out);
    if (*word) return cmd_word(n, w1, parse_ring(ring), out);
    if (*verify) return cmd_verify(n, parse_ring(ring), out);
    if (*eq) return cmd_eq(n, w1, w2, out);
    if (*rank) return cmd_rank(n, k, out);
    if (*tower) return cmd_tower_check(n, rmax, out);
    if (*lcs) return cmd_lcs(preset, depth, out);
    if (*cx) return cmd_counterexample(rmax, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace lkb::cli
