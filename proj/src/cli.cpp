#include "gitstrata/cli.hpp"

#include "gitstrata/json_io.hpp"
#include "gitstrata/p1.hpp"
#include "gitstrata/sheaf.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gitstrata::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("input: cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input: not valid JSON");
  return j;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::vector<size_t> parse_indices(const std::string& text) {
  std::vector<size_t> out;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("support: malformed index list");
    tok = tok.substr(a, b - a + 1);
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument("");
      out.push_back(static_cast<size_t>(v));
    } catch (...) {
      throw std::invalid_argument("support: malformed index '" + tok + "'");
    }
    i = j + 1;
    if (j == text.size()) break;
  }
  return out;
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("GITSTRATA_CACHE_DIR")) return env;
  return ".gitstrata-cache";
}

json cmd_index_set(const std::string& input, bool no_cache, std::string& hash) {
  std::string content = read_file(input);
  hash = content_hash(content + kEngineVersion);
  std::filesystem::path cache_file = cache_dir() / (hash + ".json");
  if (!no_cache) {
    std::ifstream in(cache_file);
    if (in) {
      json cached = json::parse(in, nullptr, false);
      if (!cached.is_discarded()) return cached;
    }
  }
  WeightSystem ws = weight_system_from_json(parse_json(content));
  std::vector<std::string> betas;
  for (const auto& b : index_set(ws)) betas.push_back(b.to_string());
  std::sort(betas.begin(), betas.end());
  json outputs{{"betas", betas}};
  if (!no_cache) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    std::ofstream out(cache_file);
    if (out) out << outputs.dump(2);
  }
  return outputs;
}

json cmd_stratify(const std::string& input, const std::string& support_arg, std::string& hash) {
  std::string content = read_file(input);
  hash = content_hash(content + kEngineVersion);
  WeightSystem ws = weight_system_from_json(parse_json(content));
  PointSupport x(parse_indices(support_arg));
  if (x.indices.empty()) throw std::invalid_argument("support: empty");
  for (size_t i : x.indices)
    if (i >= ws.weights().size())
      throw std::invalid_argument("support: index " + std::to_string(i) + " out of range");

  QVector beta = stratum_of(x, ws);
  json outputs{{"beta", beta.to_string()},
               {"status", to_string(semistability(x, ws))}};
  if (beta.is_zero()) {
    outputs["in_Y"] = nullptr;
    outputs["in_Z"] = nullptr;
    outputs["limit_support"] = nullptr;
  } else {
    // realise beta in a Weyl translate of the support, then report
    // membership and the flow limit there
    QVector raw = min_norm_point(ws.support_weights(x), ws.ip()).point;
    QMatrix g = QMatrix::identity(ws.dim());
    if (ws.weyl()) {
      for (const auto& cand : *ws.weyl())
        if (cand.apply(raw) == beta) {
          g = cand;
          break;
        }
    }
    std::vector<QVector> moved;
    for (const auto& w : ws.weights()) moved.push_back(g.apply(w));
    WeightSystem translated(ws.dim(), std::move(moved), ws.ip());
    outputs["in_Y"] = membership_Y(x, beta, translated);
    outputs["in_Z"] = membership_Z(x, beta, translated);
    json idx = json::array();
    for (size_t i : limit_support(x, Cocharacter{beta}, translated).indices) idx.push_back(i);
    outputs["limit_support"] = idx;
  }
  return outputs;
}

json cmd_p1(long long n, const std::string& points, std::optional<long long> i,
            std::string& hash) {
  std::string canon = "p1|" + std::to_string(n) + "|" + points + "|" +
                      (i ? std::to_string(*i) : "-");
  hash = content_hash(canon + kEngineVersion);
  p1::Configuration c = p1::Configuration::parse(points);
  if (static_cast<long long>(c.n()) != n)
    throw std::invalid_argument("points: expected " + std::to_string(n) + " points, got " +
                                std::to_string(c.n()));
  json outputs{{"beta", p1::classify(c).to_string()}};
  if (i) {
    if (*i <= 0) throw std::invalid_argument("i: must be positive");
    outputs["yz"] = p1::to_string(p1::membership_yz(c, static_cast<size_t>(*i)));
    outputs["ts"] = p1::membership_ts(c, static_cast<size_t>(*i));
  } else {
    outputs["yz"] = nullptr;
    outputs["ts"] = nullptr;
  }
  return outputs;
}

json cmd_beta_type(const std::string& tau_arg, const std::string& p_arg, long long n, long long m,
                   std::string& hash) {
  std::string canon = "beta-type|" + tau_arg + "|" + p_arg + "|" + std::to_string(n) + "|" +
                      std::to_string(m);
  hash = content_hash(canon + kEngineVersion);
  std::vector<HilbertPolynomial> entries;
  size_t i = 0;
  while (i <= tau_arg.size()) {
    size_t j = tau_arg.find(';', i);
    if (j == std::string::npos) j = tau_arg.size();
    try {
      entries.push_back(HilbertPolynomial::parse(tau_arg.substr(i, j - i)));
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("tau: ") + e.what());
    }
    i = j + 1;
    if (j == tau_arg.size()) break;
  }
  HilbertPolynomial total;
  try {
    total = HilbertPolynomial::parse(p_arg);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("P: ") + e.what());
  }
  HNType tau(std::move(entries));
  if (tau.total() != total)
    throw std::invalid_argument("P: entries of tau do not sum to P");
  BetaVector bv = beta_of_type(tau, n, m);
  json vec = json::array();
  for (const auto& [value, mult] : bv.entries) vec.push_back(json::array({value.to_string(), mult}));
  ParabolicBlocks blocks = parabolic_blocks(bv.expanded());
  json outputs{{"beta_vector", vec},
               {"trace_check", bv.trace().to_string()},
               {"blocks", blocks.block_sizes},
               {"dim_unipotent", blocks.dim_unipotent},
               {"dim_levi_gl", blocks.dim_levi_gl}};
  return outputs;
}

json cmd_hn(const std::string& splitting, std::string& hash) {
  std::string canon = "hn|" + splitting;
  hash = content_hash(canon + kEngineVersion);
  sheaf::SplitBundle b = sheaf::SplitBundle::parse(splitting);
  sheaf::HnResult r = sheaf::hn_filtration(b);
  json tau = json::array();
  for (const auto& p : r.type) tau.push_back(p.to_string());
  json pieces = json::array();
  for (const auto& p : r.pieces)
    pieces.push_back(json::array({p.slope, p.piece.to_string()}));
  return json{{"tau", tau},
              {"pieces", pieces},
              {"hilbert_poly", sheaf::hilbert_poly(b).to_string()}};
}

json cmd_blowup(const std::string& input, std::string& hash) {
  std::string content = read_file(input);
  hash = content_hash(content + kEngineVersion);
  BlowupState st = BlowupState::init(cells_from_json(parse_json(content)));
  bool preserves = st.p_preserves();
  int d_max0 = st.d_max(), d_min0 = st.d_min();
  BlowupState done = st.run();
  auto survivors = done.survivors();
  std::sort(survivors.begin(), survivors.end());
  auto zmin = done.zmin_ids();
  std::sort(zmin.begin(), zmin.end());
  json outputs{{"steps", done.step_count()},
               {"trace", trace_to_json(done.trace())},
               {"survivors", survivors},
               {"zmin", zmin},
               {"p_preserves", preserves},
               {"d_max_initial", d_max0},
               {"d_min_initial", d_min0},
               {"d_final", done.d_max()}};
  return outputs;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"exact toolkit for instability stratifications"};
  app.require_subcommand(1);

  std::string input, support, points, tau_arg, p_arg, splitting;
  long long n = 0, m = 0;
  long long i_flag = -1;
  bool no_cache = false;

  CLI::App* c_index = app.add_subcommand("index-set", "index set of a weight system");
  c_index->add_option("--input", input, "weight system JSON file")->required();
  c_index->add_flag("--no-cache", no_cache, "bypass the report cache");

  CLI::App* c_strat = app.add_subcommand("stratify", "stratum data of a support");
  c_strat->add_option("--input", input, "weight system JSON file")->required();
  c_strat->add_option("--support", support, "comma-separated weight indices")->required();

  CLI::App* c_p1 = app.add_subcommand("p1", "configurations of points on the line");
  c_p1->add_option("--n", n, "number of points")->required();
  c_p1->add_option("--points", points, "comma-separated values, 'inf' allowed")->required();
  c_p1->add_option("--i", i_flag, "stratum index for Y/Z membership");

  CLI::App* c_beta = app.add_subcommand("beta-type", "beta vector of an HN type");
  c_beta->add_option("--tau", tau_arg, "semicolon-separated polynomials")->required();
  c_beta->add_option("--P", p_arg, "total Hilbert polynomial")->required();
  c_beta->add_option("--n", n, "twist n")->required();
  c_beta->add_option("--m", m, "twist m")->required();

  CLI::App* c_hn = app.add_subcommand("hn", "filtration of a split bundle");
  c_hn->add_option("--splitting", splitting, "degree multiset, e.g. 2,0,0")->required();

  CLI::App* c_blow = app.add_subcommand("blowup", "run the blow-up state machine");
  c_blow->add_option("--input", input, "cell graph JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string("argument error: ") + e.what() + "\n"};
  }

  try {
    std::string hash;
    json outputs;
    if (c_index->parsed())
      outputs = cmd_index_set(input, no_cache, hash);
    else if (c_strat->parsed())
      outputs = cmd_stratify(input, support, hash);
    else if (c_p1->parsed())
      outputs = cmd_p1(n, points, i_flag >= 0 ? std::optional<long long>(i_flag) : std::nullopt,
                       hash);
    else if (c_beta->parsed())
      outputs = cmd_beta_type(tau_arg, p_arg, n, m, hash);
    else if (c_hn->parsed())
      outputs = cmd_hn(splitting, hash);
    else
      outputs = cmd_blowup(input, hash);
    return {0, make_report(join_args(args), hash, outputs), ""};
  } catch (const std::exception& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (...) {
    return {2, "", "unknown error\n"};
  }
}

}  // namespace gitstrata::cli
