#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "segal/double_cat.hpp"
#include "segal/hall.hpp"
#include "segal/operad.hpp"
#include "segal/reproduce.hpp"
#include "segal/umap.hpp"

using namespace segal;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

// Options shared by the subcommands that accept any simplicial-set source.
struct SourceOpts {
  std::string input_json;
  std::string tree_file;
  std::string graph_file;
  std::string flavour = "plain";
  bool unlabelled = false;
  bool allow_loops = false;
  int trunc = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input_json, "levelwise simplicial set as JSON");
    cmd->add_option("--tree", tree_file, "forest expression file");
    cmd->add_option("--graph", graph_file, "graph edge-list file");
    cmd->add_option("--flavour", flavour, "labelled|planar|plain (tree input)");
    cmd->add_flag("--unlabelled", unlabelled, "unlabelled graph variant");
    cmd->add_flag("--allow-loops", allow_loops, "admit loop edges");
    cmd->add_option("--trunc", trunc, "truncation (default: vertices + 2)");
  }

  LevelwiseSimplicialSet load() const {
    if (!input_json.empty()) return lss_from_json(nlohmann::json::parse(slurp(input_json)));
    if (!tree_file.empty()) {
      auto f = flavour_from_string(flavour);
      RootedForest t = parse_forest(slurp(tree_file), f);
      return build_xt(t, f, trunc > 0 ? trunc : default_truncation(t)).x;
    }
    if (!graph_file.empty()) {
      Graph g = parse_graph(slurp(graph_file), !unlabelled, allow_loops);
      return build_xg(g, trunc > 0 ? trunc : graph_default_truncation(g)).x;
    }
    throw CLI::ValidationError("one of --input/--tree/--graph is required");
  }
};

ordered_json verify_report(const LevelwiseSimplicialSet& x, int tri_max) {
  ordered_json rep;
  auto violations = check_identities(x);
  rep["identities_ok"] = violations.empty();
  if (!violations.empty())
    rep["identity_violation"] = {{"rule", violations[0].rule},
                                 {"n", violations[0].n},
                                 {"i", violations[0].i},
                                 {"j", violations[0].j},
                                 {"element", violations[0].elem}};
  auto pb = check_2segal_pullbacks(x, x.truncation);
  rep["pullback_2segal_ok"] = pb.ok;
  if (!pb.ok)
    rep["pullback_witness"] = {{"n", pb.witnesses[0].n},
                               {"i", pb.witnesses[0].i},
                               {"family", pb.witnesses[0].family},
                               {"detail", pb.witnesses[0].detail}};
  auto tri = check_2segal_triangulations(x, tri_max);
  rep["triangulation_2segal_ok"] = tri.ok;
  if (!tri.ok)
    rep["triangulation_witness"] = {{"n", tri.witnesses[0].n},
                                    {"detail", tri.witnesses[0].detail}};
  rep["verdicts_agree"] = pb.ok == tri.ok;
  return rep;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string hall_csv(const HallTable& h) {
  std::ostringstream out;
  out << "a,b,product\r\n";
  for (std::size_t a = 0; a < h.basis.size(); ++a)
    for (std::size_t b = 0; b < h.basis.size(); ++b) {
      auto prod = h.multiply(static_cast<int>(a), static_cast<int>(b));
      std::string sum;
      for (auto& [z, c] : prod) {
        if (!sum.empty()) sum += " + ";
        if (c != 1) sum += std::to_string(c) + "*";
        sum += h.basis[z];
      }
      if (sum.empty()) sum = "0";
      out << csv_quote(h.basis[a]) << ',' << csv_quote(h.basis[b]) << ','
          << csv_quote(sum) << "\r\n";
    }
  return out.str();
}

ordered_json hall_json(const HallTable& h) {
  ordered_json j;
  j["basis"] = h.basis;
  j["unit"] = h.basis[h.unit];
  ordered_json prods = ordered_json::array();
  for (auto& [key, terms] : h.products) {
    ordered_json entry;
    entry["a"] = h.basis[key.first];
    entry["b"] = h.basis[key.second];
    ordered_json ts = ordered_json::array();
    for (auto& [z, c] : terms) ts.push_back({{"basis", h.basis[z]}, {"coeff", c}});
    entry["terms"] = ts;
    prods.push_back(entry);
  }
  j["products"] = prods;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-Segal sets from admissible cuts of rooted trees and from graph subgraphs"};
  app.require_subcommand(1);
  int exit_status = 0;

  // segal build|verify
  auto* segal_cmd = app.add_subcommand("segal", "build or verify X^T for a rooted forest");
  segal_cmd->require_subcommand(1);
  auto* sb = segal_cmd->add_subcommand("build", "write X^T as JSON");
  SourceOpts sb_opts;
  std::string sb_out;
  sb->add_option("--input", sb_opts.tree_file, "forest expression file")->required();
  sb->add_option("--flavour", sb_opts.flavour, "labelled|planar|plain");
  sb->add_option("--trunc", sb_opts.trunc, "truncation");
  sb->add_option("--out", sb_out, "output path (default stdout)");
  sb->callback([&] {
    auto f = flavour_from_string(sb_opts.flavour);
    RootedForest t = parse_forest(slurp(sb_opts.tree_file), f);
    auto s = build_xt(t, f, sb_opts.trunc > 0 ? sb_opts.trunc : default_truncation(t));
    emit(to_json(s.x).dump(2) + "\n", sb_out);
  });
  auto* sv = segal_cmd->add_subcommand("verify", "simplicial identities and 2-Segal checks");
  SourceOpts sv_opts;
  int sv_tri = 6;
  sv->add_option("--input", sv_opts.tree_file, "forest expression file")->required();
  sv->add_option("--flavour", sv_opts.flavour, "labelled|planar|plain");
  sv->add_option("--trunc", sv_opts.trunc, "truncation");
  sv->add_option("--tri-max", sv_tri, "largest level for the triangulation oracle");
  sv->callback([&] {
    auto f = flavour_from_string(sv_opts.flavour);
    RootedForest t = parse_forest(slurp(sv_opts.tree_file), f);
    auto s = build_xt(t, f, sv_opts.trunc > 0 ? sv_opts.trunc : default_truncation(t));
    auto rep = verify_report(s.x, sv_tri);
    std::cout << rep.dump(2) << '\n';
    if (!rep["identities_ok"] || !rep["pullback_2segal_ok"] ||
        !rep["triangulation_2segal_ok"])
      exit_status = 1;
  });

  // graph build|verify
  auto* graph_cmd = app.add_subcommand("graph", "build or verify X^G for a finite graph");
  graph_cmd->require_subcommand(1);
  auto* gb = graph_cmd->add_subcommand("build", "write X^G as JSON");
  SourceOpts gb_opts;
  std::string gb_out;
  gb->add_option("--input", gb_opts.graph_file, "graph edge-list file")->required();
  gb->add_flag("--unlabelled", gb_opts.unlabelled, "unlabelled variant");
  gb->add_flag("--allow-loops", gb_opts.allow_loops, "admit loop edges");
  gb->add_option("--trunc", gb_opts.trunc, "truncation");
  gb->add_option("--out", gb_out, "output path (default stdout)");
  gb->callback([&] {
    Graph g = parse_graph(slurp(gb_opts.graph_file), !gb_opts.unlabelled, gb_opts.allow_loops);
    auto s = build_xg(g, gb_opts.trunc > 0 ? gb_opts.trunc : graph_default_truncation(g));
    emit(to_json(s.x).dump(2) + "\n", gb_out);
  });
  auto* gv = graph_cmd->add_subcommand("verify", "simplicial identities and 2-Segal checks");
  SourceOpts gv_opts;
  int gv_tri = 6;
  gv->add_option("--input", gv_opts.graph_file, "graph edge-list file")->required();
  gv->add_flag("--unlabelled", gv_opts.unlabelled, "unlabelled variant");
  gv->add_flag("--allow-loops", gv_opts.allow_loops, "admit loop edges");
  gv->add_option("--trunc", gv_opts.trunc, "truncation");
  gv->add_option("--tri-max", gv_tri, "largest level for the triangulation oracle");
  gv->callback([&] {
    Graph g = parse_graph(slurp(gv_opts.graph_file), !gv_opts.unlabelled, gv_opts.allow_loops);
    auto s = build_xg(g, gv_opts.trunc > 0 ? gv_opts.trunc : graph_default_truncation(g));
    auto rep = verify_report(s.x, gv_tri);
    std::cout << rep.dump(2) << '\n';
    if (!rep["identities_ok"] || !rep["pullback_2segal_ok"] ||
        !rep["triangulation_2segal_ok"])
      exit_status = 1;
  });

  // umap check
  auto* umap_cmd = app.add_subcommand("umap", "the map U: X^T -> X^G");
  umap_cmd->require_subcommand(1);
  auto* uc = umap_cmd->add_subcommand("check", "validate U, CULF, relatively Segal");
  SourceOpts uc_opts;
  uc->add_option("--tree", uc_opts.tree_file, "forest expression file")->required();
  uc->add_option("--flavour", uc_opts.flavour, "labelled|planar|plain");
  uc->add_option("--trunc", uc_opts.trunc, "truncation (default: vertices + 1)");
  uc->callback([&] {
    auto f = flavour_from_string(uc_opts.flavour);
    RootedForest t = parse_forest(slurp(uc_opts.tree_file), f);
    int trunc = uc_opts.trunc > 0 ? uc_opts.trunc : t.size() + 1;
    auto xt = build_xt(t, f, trunc);
    auto xg = build_xg(underlying_graph(t), trunc);
    auto u = build_u(xt, xg);
    ordered_json rep;
    auto bad = u.map.validate();
    rep["simplicial_map_ok"] = !bad.has_value();
    auto culf = check_culf(u, trunc);
    rep["culf"] = culf.holds;
    if (culf.witness)
      rep["culf_witness"] = {{"n", culf.witness->n},
                             {"base", culf.witness->base_code},
                             {"tree_fibre", culf.witness->tree_fibre},
                             {"graph_fibre", culf.witness->graph_fibre},
                             {"detail", culf.witness->detail}};
    auto rel = check_relatively_segal(u, trunc);
    rep["relatively_segal"] = rel.holds;
    if (rel.witness)
      rep["relatively_segal_witness"] = {{"n", rel.witness->n},
                                         {"element", rel.witness->base_code},
                                         {"preimages", rel.witness->tree_fibre},
                                         {"compatible_tuples", rel.witness->graph_fibre},
                                         {"detail", rel.witness->detail}};
    std::cout << rep.dump(2) << '\n';
  });

  // double census|export
  auto* dbl_cmd = app.add_subcommand("double", "the double category P(X)");
  dbl_cmd->require_subcommand(1);
  auto* dc = dbl_cmd->add_subcommand("census", "object/morphism/square counts");
  SourceOpts dc_opts;
  bool dc_strict = false;
  dc_opts.attach(dc);
  dc->add_flag("--strict-only", dc_strict, "report only all-layers-nonempty squares");
  dc->callback([&] {
    auto x = dc_opts.load();
    auto d = extract_double_category(x);
    auto c = census_double(d);
    ordered_json rep;
    rep["objects"] = c.objects;
    rep["hor"] = c.hor;
    rep["ver"] = c.ver;
    rep["hor_nonidentity"] = c.hor_nonidentity;
    if (dc_strict)
      rep["squares_strict"] = c.squares_strict;
    else {
      rep["squares"] = c.squares;
      rep["squares_strict"] = c.squares_strict;
    }
    rep["stable"] = check_stable(d).ok;
    rep["pointed"] = check_pointed(d).ok;
    std::cout << rep.dump(2) << '\n';
  });
  auto* de = dbl_cmd->add_subcommand("export", "DOT diagram and square sidecar");
  SourceOpts de_opts;
  std::string de_dot, de_squares;
  de_opts.attach(de);
  de->add_option("--dot", de_dot, "DOT output path")->required();
  de->add_option("--squares", de_squares, "square sidecar JSON path")->required();
  de->callback([&] {
    auto x = de_opts.load();
    auto d = extract_double_category(x);
    emit(to_dot(d), de_dot);
    emit(squares_json(d).dump(2) + "\n", de_squares);
  });

  // hall table|check
  auto* hall_cmd = app.add_subcommand("hall", "the Hall algebra of a reduced 2-Segal set");
  hall_cmd->require_subcommand(1);
  auto* ht = hall_cmd->add_subcommand("table", "multiplication table");
  SourceOpts ht_opts;
  std::string ht_format = "csv", ht_out;
  ht_opts.attach(ht);
  ht->add_option("--format", ht_format, "csv|json");
  ht->add_option("--out", ht_out, "output path (default stdout)");
  ht->callback([&] {
    auto x = ht_opts.load();
    auto h = build_hall(x);
    if (ht_format == "csv")
      emit(hall_csv(h), ht_out);
    else if (ht_format == "json")
      emit(hall_json(h).dump(2) + "\n", ht_out);
    else
      throw CLI::ValidationError("--format must be csv or json");
  });
  auto* hc = hall_cmd->add_subcommand("check", "algebra laws and commutativity");
  SourceOpts hc_opts;
  hc_opts.attach(hc);
  hc->callback([&] {
    auto x = hc_opts.load();
    auto h = build_hall(x);
    auto laws = check_algebra_laws(h);
    auto comm = is_commutative(h);
    ordered_json rep;
    rep["associative"] = laws.associative;
    rep["unital"] = laws.unital;
    rep["commutative"] = comm.commutative;
    if (comm.witness)
      rep["noncommuting_pair"] = {h.basis[comm.witness->first], h.basis[comm.witness->second]};
    if (!laws.detail.empty()) rep["detail"] = laws.detail;
    std::cout << rep.dump(2) << '\n';
    if (!laws.associative || !laws.unital) exit_status = 1;
  });

  // operad ops|verify
  auto* op_cmd = app.add_subcommand("operad", "the coloured (co)operad Q_X");
  op_cmd->require_subcommand(1);
  auto* oo = op_cmd->add_subcommand("ops", "list operations with a given profile");
  SourceOpts oo_opts;
  std::string oo_profile;
  int oo_arity = -1;
  oo_opts.attach(oo);
  oo->add_option("--profile", oo_profile, "c1,...,cn|c0 as canonical codes")->required();
  oo->add_option("--max-arity", oo_arity, "default: truncation - 1");
  oo->callback([&] {
    auto x = oo_opts.load();
    auto bar = oo_profile.find('|');
    if (bar == std::string::npos) throw CLI::ValidationError("--profile needs 'inputs|output'");
    std::vector<int> in;
    std::string part;
    std::istringstream ins{oo_profile.substr(0, bar)};
    while (std::getline(ins, part, ',')) {
      int idx = x.find(1, part);
      if (idx < 0) throw CLI::ValidationError("unknown colour " + part);
      in.push_back(idx);
    }
    int out_idx = x.find(1, oo_profile.substr(bar + 1));
    if (out_idx < 0) throw CLI::ValidationError("unknown output colour");
    auto o = build_operad(x, oo_arity > 0 ? oo_arity : x.truncation - 1);
    ordered_json rep = ordered_json::array();
    for (int e : operations(o, in, out_idx))
      rep.push_back(x.levels[in.size()][e]);
    std::cout << rep.dump(2) << '\n';
  });
  auto* ov = op_cmd->add_subcommand("verify", "invertibility of all (co)composition maps");
  SourceOpts ov_opts;
  int ov_arity = -1;
  ov_opts.attach(ov);
  ov->add_option("--max-arity", ov_arity, "default: truncation - 1");
  ov->callback([&] {
    auto x = ov_opts.load();
    auto o = build_operad(x, ov_arity > 0 ? ov_arity : x.truncation - 1);
    auto rep = check_invertible(o);
    ordered_json j;
    j["invertible"] = rep.invertible;
    if (rep.witness) {
      j["witness_shape"] = rep.witness->shape;
      j["detail"] = rep.witness->detail;
    }
    std::cout << j.dump(2) << '\n';
    if (!rep.invertible) exit_status = 1;
  });

  // reproduce
  auto* rp = app.add_subcommand("reproduce", "recompute the bundled reference counts");
  bool rp_all = false, rp_core = false;
  rp->add_flag("--all", rp_all, "every reference count, including disputed entries");
  rp->add_flag("--core", rp_core, "undisputed entries only");
  rp->callback([&] {
    auto rows = (rp_all || !rp_core) ? reproduce_all() : reproduce_core();
    std::cout << format_table(rows);
    for (const auto& r : rows)
      if (!r.pass() && !r.disputed) exit_status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
