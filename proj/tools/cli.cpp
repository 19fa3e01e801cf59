#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "fuzz.hpp"
#include "json.hpp"
#include "racg/abelianization.hpp"
#include "racg/davis.hpp"
#include "racg/error.hpp"
#include "racg/nerve.hpp"
#include "racg/rigidity.hpp"

namespace racg::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CommutationGraph load_graph(const std::string& path) { return validate_right_angled(parse_presentation(read_file(path))); }

Json subset_json(const CommutationGraph& g, GenSubset a) {
  Json arr = Json::array();
  for (int i : a.members()) arr.push_back(g.name(i));
  return arr;
}

std::vector<NormalWord> read_sprime(const CommutationGraph& g, const std::string& path) {
  std::vector<NormalWord> images;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    images.push_back(normalize(g, parse_word(g, line)));
  }
  return images;
}

bool is_refutation(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongCardinality:
    case ErrorKind::NotInvolution:
    case ErrorKind::GenerationUnverified:
    case ErrorKind::NoMatch:
    case ErrorKind::Ambiguous:
    case ErrorKind::NotBijective:
    case ErrorKind::SignatureMismatch:
    case ErrorKind::NotFound:
      return true;
    default:
      return false;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  CoxeterPresentation p = parse_presentation(read_file(file));
  try {
    CommutationGraph g = validate_right_angled(p);
    Json j;
    j["right_angled"] = true;
    j["generators"] = g.names();
    Json edges = Json::array();
    for (auto [s, t] : g.edges()) edges.push_back(Json::array({g.name(s), g.name(t)}));
    j["edges"] = edges;
    emit(out, j);
    return kExitOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotRightAngled) throw;
    err << e.what() << '\n';
    Json j;
    j["right_angled"] = false;
    j["error"] = e.what();
    emit(out, j);
    return kExitRefuted;
  }
}

int cmd_nerve(const std::string& file, bool maximal_only, std::ostream& out) {
  CommutationGraph g = load_graph(file);
  Json j;
  Json maximal = Json::array();
  for (GenSubset a : maximal_cliques(g).cliques) maximal.push_back(subset_json(g, a));
  j["maximal"] = maximal;
  if (!maximal_only) {
    Json all = Json::array();
    for (GenSubset a : all_cliques(g)) all.push_back(subset_json(g, a));
    j["simplices"] = all;
  }
  emit(out, j);
  return kExitOk;
}

int cmd_davis(const std::string& file, int radius, const std::string& out_path, std::ostream& out) {
  CommutationGraph g = load_graph(file);
  BallComplex ball = build_ball(g, radius);
  Json j;
  j["radius"] = radius;
  Json vertices = Json::array();
  for (const auto& c : ball.vertices) {
    Json v;
    v["rep"] = format_word(g, c.rep);
    v["A"] = subset_json(g, c.a);
    vertices.push_back(v);
  }
  j["vertices"] = vertices;
  Json simplices = Json::object();
  for (std::size_t d = 1; d < ball.simplices.size(); ++d) simplices[std::to_string(d)] = ball.simplices[d];
  j["simplices"] = simplices;
  j["euler_characteristic"] = ball.euler_characteristic();
  if (out_path.empty()) {
    emit(out, j);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
    emit(f, j);
  }
  return kExitOk;
}

int cmd_rigidity(const std::string& file, const std::string& sprime_path, int gen_radius, std::ostream& out,
                 std::ostream& err) {
  CommutationGraph g = load_graph(file);
  GeneratingSet gset{read_sprime(g, sprime_path)};
  Json j;
  try {
    InducedSystem sys = induce_system(g, gset, gen_radius);
    j["involutions"] = true;
    Json edges = Json::array();
    for (auto [s, t] : sys.graph.edges()) edges.push_back(Json::array({format_word(g, gset.images[s]), format_word(g, gset.images[t])}));
    j["induced_edges"] = edges;

    StarCorrespondence corr = star_correspondence(g, sys);
    NerveStar base = maximal_cliques(g);
    Json correspondence = Json::array();
    for (std::size_t k = 0; k < base.size(); ++k) {
      Json images = Json::array();
      for (int t : sys.nstar[corr.forward[k]].members()) images.push_back(format_word(g, gset.images[t]));
      correspondence.push_back(Json::array({subset_json(g, base[k]), images}));
    }
    j["correspondence"] = correspondence;

    Equivalence eq = extract_equivalence(g, corr, sys);
    Json phi = Json::object();
    for (int s = 0; s < g.size(); ++s) phi[g.name(s)] = format_word(g, gset.images[eq.phi[s]]);
    j["phi"] = phi;
    const bool verified = verify_equivalence(g, sys, eq);
    j["verified"] = verified;
    emit(out, j);
    return verified ? kExitOk : kExitRefuted;
  } catch (const Error& e) {
    if (!is_refutation(e.kind())) throw;
    err << e.what() << '\n';
    if (!j.contains("involutions")) j["involutions"] = e.kind() != ErrorKind::NotInvolution;
    j["verified"] = false;
    j["error"] = e.what();
    emit(out, j);
    return kExitRefuted;
  }
}

int cmd_iso(const std::string& f1, const std::string& f2, std::ostream& out) {
  CoxeterPresentation p1 = parse_presentation(read_file(f1));
  CoxeterPresentation p2 = parse_presentation(read_file(f2));
  auto witness = decide_isomorphic(p1, p2);
  Json j;
  j["isomorphic"] = witness.has_value();
  if (witness) {
    Json map = Json::object();
    for (int s = 0; s < p1.size(); ++s) map[p1.names()[s]] = p2.names()[witness->perm[s]];
    j["map"] = map;
  }
  emit(out, j);
  return witness ? kExitOk : kExitRefuted;
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out) {
  std::vector<FuzzTrial> trials = run_fuzz(options);
  int passed = 0;
  Json list = Json::array();
  for (const auto& t : trials) {
    passed += t.ok ? 1 : 0;
    Json jt;
    jt["trial"] = t.index;
    jt["n"] = t.n;
    jt["edges"] = t.edges;
    jt["length"] = t.length;
    jt["ok"] = t.ok;
    if (!t.ok) jt["error"] = t.error;
    list.push_back(jt);
  }
  Json j;
  j["n"] = options.max_n;
  j["iters"] = options.iters;
  j["seed"] = options.seed;
  j["auto_length"] = options.auto_length;
  j["passed"] = passed;
  j["failed"] = options.iters - passed;
  j["summary"] = std::to_string(passed) + "/" + std::to_string(options.iters) + " round trips verified";
  j["trials"] = list;
  emit(out, j);
  return passed == options.iters ? kExitOk : kExitRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Coxeter group toolkit", "racg"};
  app.require_subcommand(1);

  std::string file, file2, word, word2, out_path, sprime;
  int radius = 0;
  int gen_radius = kDefaultGenRadius;
  bool maximal_only = false;
  FuzzOptions fuzz;

  auto* validate = app.add_subcommand("validate", "check that a presentation is right-angled");
  validate->add_option("FILE", file)->required();

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("FILE", file)->required();
  nf->add_option("WORD", word)->required();

  auto* order = app.add_subcommand("order", "order of an element: 1, 2 or inf");
  order->add_option("FILE", file)->required();
  order->add_option("WORD", word)->required();

  auto* mul = app.add_subcommand("mul", "normal form of a product");
  mul->add_option("FILE", file)->required();
  mul->add_option("WORD1", word)->required();
  mul->add_option("WORD2", word2)->required();

  auto* nerve = app.add_subcommand("nerve", "cliques of the commutation graph");
  nerve->add_option("FILE", file)->required();
  nerve->add_flag("--maximal", maximal_only, "only maximal cliques");

  auto* davis = app.add_subcommand("davis", "coset complex ball");
  davis->add_option("FILE", file)->required();
  davis->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  davis->add_option("--out", out_path);

  auto* rigidity = app.add_subcommand("rigidity", "certify equivalence with a second generating set");
  rigidity->add_option("FILE", file)->required();
  rigidity->add_option("--sprime", sprime)->required();
  rigidity->add_option("--gen-radius", gen_radius)->check(CLI::NonNegativeNumber);

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two right-angled Coxeter groups");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file2)->required();

  auto* fz = app.add_subcommand("fuzz", "seeded round-trip harness");
  fz->add_option("--n", fuzz.max_n)->required()->check(CLI::Range(1, kMaxGenerators));
  fz->add_option("--iters", fuzz.iters)->required()->check(CLI::NonNegativeNumber);
  fz->add_option("--seed", fuzz.seed)->required();
  fz->add_option("--auto-length", fuzz.auto_length)->check(CLI::NonNegativeNumber);
  fz->add_option("--threads", fuzz.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*validate) return cmd_validate(file, out, err);
    if (*nf || *order || *mul) {
      CommutationGraph g = load_graph(file);
      NormalWord u = normalize(g, parse_word(g, word));
      if (*nf) out << format_word(g, u) << '\n';
      if (*order) out << to_string(element_order(g, u)) << '\n';
      if (*mul) out << format_word(g, multiply(g, u, normalize(g, parse_word(g, word2)))) << '\n';
      return kExitOk;
    }
    if (*nerve) return cmd_nerve(file, maximal_only, out);
    if (*davis) return cmd_davis(file, radius, out_path, out);
    if (*rigidity) return cmd_rigidity(file, sprime, gen_radius, out, err);
    if (*iso) return cmd_iso(file, file2, out);
    if (*fz) return cmd_fuzz(fuzz, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_refutation(e.kind()) ? kExitRefuted : kExitInput;
  }
  return kExitInput;
}

}  // namespace racg::cli
