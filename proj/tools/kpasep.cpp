#include "CLI11.hpp"
#include "json.hpp"
#include "kpasep/ansatz.hpp"
#include "kpasep/pasep.hpp"
#include "kpasep/ratchain.hpp"
#include "kpasep/rhombic.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using json = nlohmann::ordered_json;
using namespace kpasep;

namespace {

// Thrown for bad user input; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word read_word(const std::string& text, int k) {
  try {
    Word w = parse_word(text);
    check_word(w, k);
    return w;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  }
}

Rational read_rate(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("bad rational for ") + what + ": " + text);
  }
}

std::vector<int> read_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + text);
    }
  }
  return out;
}

Sector read_sector(const std::string& text, int k) {
  Sector s = text.empty() ? Sector{} : read_ints(text);
  if (static_cast<int>(s.size()) != k - 1) throw UsageError("sector needs k-1 counts");
  return s;
}

// Every sector of length-n words for k species.
std::vector<Sector> all_sectors(int n, int k) {
  std::vector<Sector> out;
  Sector cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (static_cast<int>(cur.size()) == k - 1) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r <= left; ++r) {
      cur.push_back(r);
      self(self, left - r);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

RateParams read_qmatrix(const std::string& path, RateParams p) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
    auto rate = [](const json& v) { return parse_rational(v.get<std::string>()); };
    if (j.contains("q0inf")) p.q0inf = rate(j["q0inf"]);
    const json q0i = j.value("q0i", json::object());
    for (const auto& [key, v] : q0i.items()) p.q0i[std::stoi(key)] = rate(v);
    const json qiinf = j.value("qiinf", json::object());
    for (const auto& [key, v] : qiinf.items()) p.qiinf[std::stoi(key)] = rate(v);
    const json qij = j.value("qij", json::object());
    for (const auto& [key, v] : qij.items()) {
      const auto ij = read_ints(key);
      if (ij.size() != 2) throw UsageError("qij key must be \"i,j\": " + key);
      p.qij[{ij[0], ij[1]}] = rate(v);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad qmatrix file: " + std::string(e.what()));
  }
  return p;
}

json params_json(const RateParams& p) {
  json j;
  j["alpha"] = to_string(p.alpha);
  j["beta"] = to_string(p.beta);
  j["q0inf"] = to_string(p.q0inf);
  auto per = [](const std::map<int, Rational>& m) {
    json o = json::object();
    for (const auto& [i, v] : m) o[std::to_string(i)] = to_string(v);
    return o;
  };
  j["q0i"] = per(p.q0i);
  j["qiinf"] = per(p.qiinf);
  json o = json::object();
  for (const auto& [ij, v] : p.qij) o[std::to_string(ij.first) + "," + std::to_string(ij.second)] = to_string(v);
  j["qij"] = o;
  return j;
}

json tableau_json(const Diagram& d, const Filling& f) {
  json j;
  j["word"] = to_string(d.word());
  j["tiling"] = f.tiling == maximal_tiling(d) ? "maximal" : "other";
  const auto st = statuses(d, f);
  json syms = json::array();
  for (std::size_t id = 0; id < d.tiles().size(); ++id) {
    syms.push_back({{"pair", {d.tiles()[id].p + 1, d.tiles()[id].pp + 1}}, {"sym", symbol_name(st[id])}});
  }
  j["symbols"] = syms;
  j["weight"] = wt(d, f).to_string();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for the multispecies exclusion process and its tableaux"};
  app.require_subcommand(1);
  int result = 0;

  // stationary
  auto* stat = app.add_subcommand("stationary", "exact stationary distribution of a sector");
  int st_k = 2, st_n = 0;
  std::string st_sector, st_alpha, st_beta, st_q = "1", st_qmatrix, st_format = "json";
  stat->add_option("--k", st_k)->check(CLI::Range(1, 10));
  stat->add_option("--n", st_n)->required()->check(CLI::Range(1, 64));
  stat->add_option("--sector", st_sector, "comma separated a-species counts");
  stat->add_option("--alpha", st_alpha)->required();
  stat->add_option("--beta", st_beta)->required();
  stat->add_option("--q", st_q);
  stat->add_option("--qmatrix", st_qmatrix, "JSON file with distinct swap rates");
  stat->add_option("--format", st_format)->check(CLI::IsMember({"json", "csv"}));
  stat->callback([&] {
    const Sector sector = read_sector(st_sector, st_k);
    RateParams p = RateParams::uniform(read_rate(st_alpha, "alpha"), read_rate(st_beta, "beta"), read_rate(st_q, "q"));
    if (!st_qmatrix.empty()) p = read_qmatrix(st_qmatrix, p);
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::vector<std::pair<Word, Rational>> pi;
    try {
      pi = stationary_exact(st_n, st_k, sector, p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (st_format == "csv") {
      std::cout << "word,prob\n";
      for (const auto& [w, v] : pi) std::cout << to_string(w) << ',' << to_string(v) << "\n";
      return;
    }
    json j;
    j["n"] = st_n;
    j["k"] = st_k;
    j["sector"] = sector;
    j["params"] = params_json(p);
    json rows = json::array();
    for (const auto& [w, v] : pi) rows.push_back({{"word", to_string(w)}, {"prob", to_string(v)}});
    j["stationary"] = rows;
    emit(j);
  });

  // tableaux
  auto* tab = app.add_subcommand("tableaux", "tableaux of a word");
  tab->require_subcommand(1);
  auto* tab_enum = tab->add_subcommand("enumerate", "every filling of the maximal tiling");
  auto* tab_weight = tab->add_subcommand("weight", "weight polynomial of a word");
  std::string tb_word, tb_format = "json";
  int tb_k = 2;
  for (auto* sub : {tab_enum, tab_weight}) {
    sub->add_option("--word", tb_word)->required();
    sub->add_option("--k", tb_k)->check(CLI::Range(1, 10));
  }
  tab_enum->add_option("--format", tb_format)->check(CLI::IsMember({"json"}));
  tab_enum->callback([&] {
    const Diagram d(read_word(tb_word, tb_k), tb_k);
    json list = json::array();
    for (const auto& f : enumerate_fillings(d)) list.push_back(tableau_json(d, f));
    json j;
    j["word"] = to_string(d.word());
    j["k"] = tb_k;
    j["count"] = list.size();
    j["weight"] = weight(d.word(), tb_k).to_string();
    j["tableaux"] = list;
    emit(j);
  });
  tab_weight->callback([&] { std::cout << weight(read_word(tb_word, tb_k), tb_k).to_string() << "\n"; });

  // verify
  auto* ver = app.add_subcommand("verify", "exact verification reports");
  ver->require_subcommand(1);

  auto* v_ansatz = ver->add_subcommand("ansatz", "quadratic relations and boundary conditions on a window");
  int va_k = 2;
  std::string va_window = "8,4", va_lambda = "1";
  v_ansatz->add_option("--k", va_k)->check(CLI::Range(2, 10));
  v_ansatz->add_option("--window", va_window, "I,J: rows with i <= I and sum j <= J");
  v_ansatz->add_option("--lambda", va_lambda);
  v_ansatz->callback([&] {
    const auto win = read_ints(va_window);
    if (win.size() != 2 || win[0] < 0 || win[1] < 0) throw UsageError("window must be I,J");
    LaurentPoly lambda;
    try {
      lambda = parse_poly(va_lambda);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad lambda: ") + e.what());
    }
    json rels = json::array();
    bool ok = true;
    for (const auto& rel : relations_for(va_k)) {
      const auto r = relation_check(rel, va_k, win[0], win[1], lambda);
      ok = ok && r.passed();
      json jr;
      jr["relation"] = r.relation;
      jr["window"] = {r.window_i, r.window_j};
      jr["residual_count"] = r.residual_count;
      jr["lambda"] = r.lambda.to_string();
      jr["rows_checked"] = r.rows_checked;
      jr["residual_samples"] = r.residual_samples;
      rels.push_back(jr);
    }
    const auto b = boundary_check(va_k, win[0], win[1]);
    ok = ok && b.passed();
    json j;
    j["k"] = va_k;
    j["window"] = {win[0], win[1]};
    j["lambda"] = lambda.to_string();
    j["relations"] = rels;
    j["boundary"] = {{"rows_checked", b.rows_checked}, {"bra", b.bra_condition}, {"ket", b.ket_condition}};
    j["passed"] = ok;
    emit(j);
    result = ok ? 0 : 1;
  });

  auto* v_weights = ver->add_subcommand("weights", "tableau weights against the matrix product and the exact solve");
  int vw_k = 2, vw_n = 3;
  std::string vw_alpha = "1/2", vw_beta = "1/3", vw_q = "1/5";
  v_weights->add_option("--k", vw_k)->check(CLI::Range(1, 10));
  v_weights->add_option("--n", vw_n)->required()->check(CLI::Range(1, 12));
  v_weights->add_option("--alpha", vw_alpha);
  v_weights->add_option("--beta", vw_beta);
  v_weights->add_option("--q", vw_q);
  v_weights->callback([&] {
    const RateParams p = RateParams::uniform(read_rate(vw_alpha, "alpha"), read_rate(vw_beta, "beta"), read_rate(vw_q, "q"));
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Assignment at;
    at.set(Var::alpha, p.alpha).set(Var::beta, p.beta).set(Var::q, p.q0inf);
    std::size_t words = 0, bridge_failures = 0, stationary_failures = 0;
    json sectors = json::array();
    for (const auto& sector : all_sectors(vw_n, vw_k)) {
      const auto states = sector_states(vw_n, vw_k, sector);
      std::vector<Rational> w;
      Rational total = 0;
      std::size_t bridge_here = 0;
      for (const auto& x : states) {
        const LaurentPoly wx = weight(x, vw_k);
        ++words;
        LaurentPoly ab(1);
        for (int i = 0; i < count_d(x) + count_e(x); ++i) ab *= alpha() * beta();
        if (wx != ab * bracket(x, vw_k)) ++bridge_here;
        w.push_back(wx.eval(at));
        total += w.back();
      }
      const auto pi = stationary_exact(vw_n, vw_k, sector, p);
      std::size_t stat_here = 0;
      for (std::size_t i = 0; i < pi.size(); ++i) stat_here += pi[i].second != w[i] / total;
      bridge_failures += bridge_here;
      stationary_failures += stat_here;
      sectors.push_back({{"sector", sector}, {"states", states.size()}, {"bridge_failures", bridge_here},
                         {"stationary_failures", stat_here}});
    }
    const bool ok = bridge_failures == 0 && stationary_failures == 0;
    json j;
    j["k"] = vw_k;
    j["n"] = vw_n;
    j["params"] = {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"q", to_string(p.q0inf)}};
    j["words_checked"] = words;
    j["bridge_failures"] = bridge_failures;
    j["stationary_failures"] = stationary_failures;
    j["sectors"] = sectors;
    j["passed"] = ok;
    emit(j);
    result = ok ? 0 : 1;
  });

  auto* v_chain = ver->add_subcommand("chain", "tableau Markov chain (k = 2)");
  int vc_n = 3, vc_r = 1;
  v_chain->add_option("--n", vc_n)->required()->check(CLI::Range(1, 8));
  v_chain->add_option("--r", vc_r)->required()->check(CLI::Range(0, 8));
  v_chain->callback([&] {
    if (vc_r > vc_n) throw UsageError("r must not exceed n");
    const RatChain c = chain(vc_n, vc_r, Execution::parallel);
    const auto pr = projection_check(c);
    const auto br = detailed_balance_check(c);
    const auto sr = stationary_check(c, Rational(1, 2), Rational(1, 3), Rational(1, 5), vc_n <= 5);
    json j;
    j["n"] = vc_n;
    j["r"] = vc_r;
    j["states"] = c.size();
    j["projection_ok"] = pr.passed();
    j["balance_ok"] = br.passed();
    j["stationary_matches_weights"] = sr.proportional_to_weight;
    j["pushforward_matches"] = sr.pushforward_matches;
    j["stationary_solved"] = sr.solved;
    json problems = pr.problems;
    for (const auto& s : br.problems) problems.push_back(s);
    j["problems"] = problems;
    emit(j);
    result = pr.passed() && br.passed() && sr.proportional_to_weight && sr.pushforward_matches ? 0 : 1;
  });

  auto* v_tilings = ver->add_subcommand("tilings", "weight is the same on every tiling");
  std::string vt_word;
  int vt_k = 2;
  v_tilings->add_option("--word", vt_word)->required();
  v_tilings->add_option("--k", vt_k)->check(CLI::Range(1, 2));
  v_tilings->callback([&] {
    const auto r = prop28_check(read_word(vt_word, vt_k), vt_k);
    json j;
    j["word"] = to_string(read_word(vt_word, vt_k));
    j["tilings"] = r.tilings;
    j["all_equal"] = r.all_equal;
    j["weight"] = r.reference.to_string();
    json mm = json::array();
    for (const auto& [i, w] : r.mismatches) mm.push_back({{"tiling", i}, {"weight", w.to_string()}});
    j["mismatches"] = mm;
    emit(j);
    result = r.all_equal ? 0 : 1;
  });

  // count
  auto* cnt = app.add_subcommand("count", "enumeration counts");
  cnt->require_subcommand(1);
  auto* cnt_classes = cnt->add_subcommand("classes", "tableau classes of a 2-species sector");
  int cc_n = 0, cc_r = 0;
  cnt_classes->add_option("--n", cc_n)->required()->check(CLI::Range(0, 12));
  cnt_classes->add_option("--r", cc_r)->required()->check(CLI::Range(0, 12));
  cnt_classes->callback([&] {
    if (cc_r > cc_n) throw UsageError("r must not exceed n");
    std::cout << count_classes(cc_n, cc_r).get_str() << "\n";
  });

  // render
  auto* ren = app.add_subcommand("render", "SVG drawing of a tableau");
  std::string rn_word, rn_out;
  int rn_k = 2, rn_index = 0;
  ren->add_option("--word", rn_word)->required();
  ren->add_option("--k", rn_k)->check(CLI::Range(1, 10));
  ren->add_option("--index", rn_index, "which filling of the maximal tiling")->check(CLI::NonNegativeNumber);
  ren->add_option("--out", rn_out)->required();
  ren->callback([&] {
    const Diagram d(read_word(rn_word, rn_k), rn_k);
    const auto fillings = enumerate_fillings(d);
    if (rn_index >= static_cast<int>(fillings.size())) throw UsageError("index out of range");
    std::ofstream out(rn_out);
    if (!out) throw UsageError("cannot write " + rn_out);
    out << render_svg(d, fillings[static_cast<std::size_t>(rn_index)]);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return result;
}
