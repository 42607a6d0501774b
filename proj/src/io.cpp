#include "acta/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "acta/error.hpp"

namespace acta::io {

  namespace {

    [[noreturn]] void syntax(std::string const& msg) {
      throw Error(ErrorKind::syntax, msg);
    }

    Json const& field(Json const& j, char const* name, std::string const& where) {
      if (!j.is_object()) {
        syntax(where + ": expected an object");
      }
      auto it = j.find(name);
      if (it == j.end()) {
        syntax(where + ": missing field '" + name + "'");
      }
      return *it;
    }

    std::size_t as_index(Json const& j, std::string const& where) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        syntax(where + ": expected a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::vector<Element> as_index_list(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        syntax(where + ": expected an array");
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(as_index(j[i], where + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    Table as_table(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        syntax(where + ": expected an array of rows");
      }
      Table out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(as_index_list(j[i], where + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    std::vector<std::string> as_labels(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        syntax(where + ": expected an array of strings");
      }
      std::vector<std::string> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
          syntax(where + "[" + std::to_string(i) + "]: expected a string");
        }
        out.push_back(j[i].get<std::string>());
      }
      return out;
    }

    bool looks_like_json(std::string_view source) {
      auto pos = source.find_first_not_of(" \t\r\n");
      return pos != std::string_view::npos && source[pos] == '{';
    }

    Json flag_json(Flag const& f) {
      Json j;
      j["value"] = f.value;
      if (!f.value) {
        j["witness"] = f.witness;
      }
      return j;
    }

    Json check_json(ConditionCheck const& c) {
      Json j;
      j["holds"] = c.holds;
      if (!c.holds) {
        j["counterexample"] = c.counterexample;
      }
      return j;
    }

    Json annihilator_json(AnnihilatorReport const& a) {
      Json j;
      j["s"]          = a.s;
      j["t"]          = a.t;
      j["members"]    = a.members;
      j["generators"] = a.generators;
      return j;
    }

  }  // namespace

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::io, "cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void write_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
      throw Error(ErrorKind::io, "cannot write " + path.string());
    }
  }

  namespace {

    bool is_flat(Json const& j) {
      return std::all_of(j.begin(), j.end(), [](Json const& x) {
        return x.is_primitive() || (x.is_array() && x.size() <= 4
                                    && std::all_of(x.begin(), x.end(),
                                                   [](Json const& y) { return y.is_primitive(); }));
      });
    }

    // Like dump(2), but arrays of scalars (and of short scalar tuples) stay
    // on one line.
    void dump_into(std::string& out, Json const& j, std::size_t depth) {
      std::string const pad(2 * depth + 2, ' ');
      if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
          out += pad + Json(it.key()).dump() + ": ";
          dump_into(out, it.value(), depth + 1);
          out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(2 * depth, ' ') + "}";
      } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
          out += pad;
          dump_into(out, j[i], depth + 1);
          out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(2 * depth, ' ') + "]";
      } else if (j.is_array() && !j.empty()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          out += (i ? ", " : "");
          if (j[i].is_array()) {
            dump_into(out, j[i], depth + 1);
          } else {
            out += j[i].dump();
          }
        }
        out += "]";
      } else if (j.is_array()) {
        out += "[]";
      } else {
        out += j.dump();
      }
    }

  }  // namespace

  std::string dump(Json const& j) {
    std::string out;
    dump_into(out, j, 0);
    return out + "\n";
  }

  Json parse_json(std::string_view source) {
    try {
      return Json::parse(source);
    } catch (Json::parse_error const& err) {
      syntax(std::string("JSON at byte ") + std::to_string(err.byte) + ": "
             + err.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid monoid_from_json(Json const& j) {
    auto order    = as_index(field(j, "order", "monoid"), "monoid.order");
    auto identity = as_index(field(j, "identity", "monoid"), "monoid.identity");
    auto table    = as_table(field(j, "table", "monoid"), "monoid.table");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = as_labels(j["labels"], "monoid.labels");
    }
    if (table.size() != order) {
      throw Error(ErrorKind::index_out_of_range,
                  "monoid.order is " + std::to_string(order) + " but the table has "
                      + std::to_string(table.size()) + " rows");
    }
    return FiniteMonoid::build(std::move(table), identity, std::move(labels));
  }

  Json monoid_to_json(FiniteMonoid const& M) {
    Json j;
    j["order"]    = M.order();
    j["identity"] = M.identity();
    j["table"]    = M.table();
    if (!M.labels().empty()) {
      j["labels"] = M.labels();
    }
    return j;
  }

  std::string serialize_monoid(FiniteMonoid const& M) {
    return dump(monoid_to_json(M));
  }

  std::string monoid_to_text(FiniteMonoid const& M) {
    std::string out = std::to_string(M.identity());
    for (Element a = 0; a < M.order(); ++a) {
      for (Element b = 0; b < M.order(); ++b) {
        if (a == 0 || b > 0) {
          out += ' ';
        }
        out += std::to_string(M.mul(a, b));
      }
      out += '\n';
    }
    return out;
  }

  FiniteMonoid monoid_from_text(std::string_view text) {
    std::vector<std::vector<Element>> rows;
    std::istringstream                in{std::string(text)};
    std::string                       line;
    std::size_t                       line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream   tokens(line);
      std::string          token;
      std::vector<Element> row;
      while (tokens >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos
            || token.size() > 9) {
          syntax("line " + std::to_string(line_no) + ": bad index '" + token + "'");
        }
        row.push_back(std::stoul(token));
      }
      if (row.empty()) {
        continue;
      }
      rows.push_back(std::move(row));
    }
    if (rows.empty()) {
      syntax("line 1: empty monoid text");
    }
    Element identity = rows[0].front();
    rows[0].erase(rows[0].begin());
    std::size_t const n = rows[0].size();
    if (n == 0 || rows.size() != n) {
      syntax("expected " + std::to_string(n) + " rows after the identity line, got "
             + std::to_string(rows.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        syntax("row " + std::to_string(i + 1) + ": expected " + std::to_string(n)
               + " entries");
      }
    }
    return FiniteMonoid::build(std::move(rows), identity);
  }

  FiniteMonoid parse_monoid(std::string_view source) {
    if (looks_like_json(source)) {
      return monoid_from_json(parse_json(source));
    }
    return monoid_from_text(source);
  }

  ////////////////////////////////////////////////////////////////////////
  // Acts
  ////////////////////////////////////////////////////////////////////////

  namespace {

    MonoidPtr monoid_of_act(Json const& j, std::filesystem::path const& base_dir) {
      auto const& ref = field(j, "monoid", "act");
      if (ref.is_object()) {
        return share(monoid_from_json(ref));
      }
      if (ref.is_string()) {
        std::filesystem::path path = ref.get<std::string>();
        if (path.is_relative() && !base_dir.empty()) {
          path = base_dir / path;
        }
        return share(parse_monoid(read_file(path)));
      }
      syntax("act.monoid: expected an object or a file path");
    }

    FiniteAct act_over(Json const& j, MonoidPtr M) {
      auto const& side_j = field(j, "side", "act");
      if (!side_j.is_string()
          || (side_j != "left" && side_j != "right")) {
        syntax("act.side: expected \"left\" or \"right\"");
      }
      Side side   = side_j == "left" ? Side::left : Side::right;
      auto size   = as_index(field(j, "size", "act"), "act.size");
      auto action = as_table(field(j, "action", "act"), "act.action");
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = as_labels(j["labels"], "act.labels");
      }
      for (std::size_t s = 0; s < action.size(); ++s) {
        if (action[s].size() != size) {
          throw Error(ErrorKind::index_out_of_range,
                      "act.action[" + std::to_string(s) + "] has "
                          + std::to_string(action[s].size())
                          + " entries, act.size is " + std::to_string(size));
        }
      }
      return FiniteAct::build(std::move(M), side, std::move(action), std::move(labels));
    }

  }  // namespace

  FiniteAct act_from_json(Json const& j, std::filesystem::path const& base_dir) {
    return act_over(j, monoid_of_act(j, base_dir));
  }

  FiniteAct act_from_json(Json const& j, MonoidPtr const& M,
                          std::filesystem::path const& base_dir) {
    if (!j.is_object()) {
      syntax("act: expected an object");
    }
    if (!j.contains("monoid")) {
      return act_over(j, M);
    }
    auto own = monoid_of_act(j, base_dir);
    if (!own->same_structure(*M)) {
      throw Error(ErrorKind::monoid_mismatch,
                  "act is over a different monoid than the one given");
    }
    return act_over(j, M);
  }

  FiniteAct parse_act(std::string_view source, std::filesystem::path const& base_dir) {
    return act_from_json(parse_json(source), base_dir);
  }

  Json act_to_json(FiniteAct const& A) {
    Json j;
    j["monoid"] = monoid_to_json(A.monoid());
    j["side"]   = to_string(A.side());
    j["size"]   = A.size();
    j["action"] = A.action();
    if (!A.labels().empty()) {
      j["labels"] = A.labels();
    }
    return j;
  }

  std::string serialize_act(FiniteAct const& A) {
    return dump(act_to_json(A));
  }

  ////////////////////////////////////////////////////////////////////////
  // Generated monoids
  ////////////////////////////////////////////////////////////////////////

  Dfa parse_dfa(std::string_view source) {
    auto j = parse_json(source);
    Dfa  dfa;
    dfa.states = as_index(field(j, "states", "dfa"), "dfa.states");
    dfa.alphabet = as_labels(field(j, "alphabet", "dfa"), "dfa.alphabet");
    auto const& delta = field(j, "delta", "dfa");
    if (!delta.is_object()) {
      syntax("dfa.delta: expected an object");
    }
    for (auto const& sym : dfa.alphabet) {
      if (!delta.contains(sym)) {
        syntax("dfa.delta: missing symbol '" + sym + "'");
      }
      auto row = as_index_list(delta[sym], "dfa.delta." + sym);
      if (row.size() != dfa.states) {
        syntax("dfa.delta." + sym + ": expected " + std::to_string(dfa.states)
               + " entries");
      }
      for (auto q : row) {
        if (q >= dfa.states) {
          throw Error(ErrorKind::index_out_of_range,
                      "dfa.delta." + sym + ": state " + std::to_string(q)
                          + " out of range",
                      {q});
        }
      }
      dfa.delta.push_back(std::move(row));
    }
    if (delta.size() != dfa.alphabet.size()) {
      syntax("dfa.delta: symbols outside the alphabet");
    }
    return dfa;
  }

  Json dfa_to_json(Dfa const& dfa) {
    Json j;
    j["states"]   = dfa.states;
    j["alphabet"] = dfa.alphabet;
    Json delta    = Json::object();
    for (std::size_t i = 0; i < dfa.alphabet.size(); ++i) {
      delta[dfa.alphabet[i]] = dfa.delta[i];
    }
    j["delta"] = std::move(delta);
    return j;
  }

  TransformationGenSet parse_transformations(std::string_view source) {
    auto                 j = parse_json(source);
    TransformationGenSet gens;
    gens.degree = as_index(field(j, "degree", "transformations"),
                           "transformations.degree");
    auto const& g = field(j, "gens", "transformations");
    if (!g.is_object()) {
      syntax("transformations.gens: expected an object");
    }
    for (auto const& [label, map] : g.items()) {
      auto image = as_index_list(map, "transformations.gens." + label);
      if (image.size() != gens.degree) {
        syntax("transformations.gens." + label + ": expected "
               + std::to_string(gens.degree) + " entries");
      }
      for (auto p : image) {
        if (p >= gens.degree) {
          throw Error(ErrorKind::index_out_of_range,
                      "transformations.gens." + label + ": point "
                          + std::to_string(p) + " out of range",
                      {p});
        }
      }
      gens.labels.push_back(label);
      gens.maps.push_back(std::move(image));
    }
    return gens;
  }

  Json transformations_to_json(TransformationGenSet const& gens) {
    Json j;
    j["degree"] = gens.degree;
    Json g      = Json::object();
    for (std::size_t i = 0; i < gens.labels.size(); ++i) {
      g[gens.labels[i]] = gens.maps[i];
    }
    j["gens"] = std::move(g);
    return j;
  }

  GeneratedMonoid transformation_monoid(TransformationGenSet const& gens) {
    std::size_t const n = gens.degree;
    for (auto const& map : gens.maps) {
      if (map.size() != n) {
        throw Error(ErrorKind::index_out_of_range, "generator of wrong degree");
      }
      for (auto p : map) {
        if (p >= n) {
          throw Error(ErrorKind::index_out_of_range, "generator point out of range", {p});
        }
      }
    }
    bool const separate = std::any_of(gens.labels.begin(), gens.labels.end(),
                                      [](auto const& l) { return l.size() != 1; });
    using Map = std::vector<Element>;
    auto then = [](Map const& x, Map const& y) {
      Map out(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) {
        out[p] = y[x[p]];
      }
      return out;
    };

    GeneratedMonoid      out{FiniteMonoid::build({{0}}, 0), {}, {}};
    std::map<Map, Element> index;
    Map                  id(n);
    for (Element p = 0; p < n; ++p) {
      id[p] = p;
    }
    out.maps.push_back(id);
    out.words.push_back("1");
    index.emplace(id, 0);
    std::vector<std::vector<std::string>> letters{{}};
    for (std::size_t i = 0; i < out.maps.size(); ++i) {
      for (std::size_t g = 0; g < gens.maps.size(); ++g) {
        auto next = then(out.maps[i], gens.maps[g]);
        if (index.contains(next)) {
          continue;
        }
        index.emplace(next, out.maps.size());
        auto word = letters[i];
        word.push_back(gens.labels[g]);
        std::string label;
        for (std::size_t k = 0; k < word.size(); ++k) {
          label += (separate && k > 0 ? "_" : "") + word[k];
        }
        out.maps.push_back(std::move(next));
        out.words.push_back(std::move(label));
        letters.push_back(std::move(word));
      }
    }
    std::size_t const m = out.maps.size();
    Table             table(m, std::vector<Element>(m));
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        table[a][b] = index.at(then(out.maps[a], out.maps[b]));
      }
    }
    out.monoid = FiniteMonoid::build(std::move(table), 0, out.words);
    return out;
  }

  GeneratedMonoid transition_monoid(Dfa const& dfa) {
    return transformation_monoid({dfa.states, dfa.alphabet, dfa.delta});
  }

  Json generated_to_json(GeneratedMonoid const& G) {
    Json j;
    j["monoid"] = monoid_to_json(G.monoid);
    j["words"]  = G.words;
    j["maps"]   = G.maps;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Results
  ////////////////////////////////////////////////////////////////////////

  Json verdict_to_json(FlatVerdict const& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["bound"]  = v.bound;
    if (v.witness) {
      Json w;
      w["skeleton"] = v.witness->skeleton.entries();
      w["chain"]    = v.witness->right_chain;
      j["witness"]  = std::move(w);
    }
    j["reason"] = v.reason;
    return j;
  }

  FlatVerdict verdict_from_json(Json const& j) {
    FlatVerdict v;
    auto const& status = field(j, "status", "verdict");
    if (status == "yes") {
      v.status = FlatStatus::yes;
    } else if (status == "no") {
      v.status = FlatStatus::no;
    } else if (status == "unknown") {
      v.status = FlatStatus::unknown;
    } else {
      syntax("verdict.status: expected yes, no or unknown");
    }
    v.bound = as_index(field(j, "bound", "verdict"), "verdict.bound");
    if (j.contains("witness")) {
      auto const& w = j["witness"];
      v.witness = FlatWitness{
          Skeleton::of(as_index_list(field(w, "skeleton", "verdict.witness"),
                                     "verdict.witness.skeleton")),
          as_index_list(field(w, "chain", "verdict.witness"),
                        "verdict.witness.chain")};
    }
    if (j.contains("reason")) {
      if (!j["reason"].is_string()) {
        syntax("verdict.reason: expected a string");
      }
      v.reason = j["reason"].get<std::string>();
    }
    return v;
  }

  Json tossing_to_json(Tossing const& T) {
    Json j;
    j["length"]      = T.skeleton.length();
    j["skeleton"]    = T.skeleton.entries();
    j["left_chain"]  = T.left_chain;
    j["right_chain"] = T.right_chain;
    return j;
  }

  Json tensor_to_json(TensorProduct const& T) {
    Json j;
    j["classes"] = T.num_classes();
    Json members = Json::array();
    for (auto const& cls : T.class_members()) {
      Json c = Json::array();
      for (auto [a, b] : cls) {
        c.push_back({a, b});
      }
      members.push_back(std::move(c));
    }
    j["members"] = std::move(members);
    return j;
  }

  Json hierarchy_to_json(ActHierarchy const& H) {
    Json j;
    auto const& fp = H.free_projective;
    Json        components = Json::array();
    for (auto const& c : fp.components) {
      Json cj;
      cj["elements"]   = c.elements;
      cj["generator"]  = c.generator ? Json(*c.generator) : Json(nullptr);
      cj["idempotent"] = c.idempotent ? Json(*c.idempotent) : Json(nullptr);
      components.push_back(std::move(cj));
    }
    j["free"]                      = {{"value", fp.is_free}, {"rank", fp.free_rank}};
    j["projective"]                = {{"value", fp.is_projective}};
    j["projective"]["components"]  = std::move(components);
    j["strongly_flat"]             = {{"value", H.strongly_flat}};
    j["strongly_flat"]["P"]        = check_json(H.condition_P);
    j["strongly_flat"]["E"]        = check_json(H.condition_E);
    j["flat"]                      = verdict_to_json(H.flat);
    j["weakly_flat"]               = {{"value", H.weakly_flat.holds}};
    if (!H.weakly_flat.holds) {
      j["weakly_flat"]["witness"] = H.weakly_flat.counterexample;
    }
    j["monotone"] = H.monotone;
    return j;
  }

  Json submonoids_to_json(std::vector<Submonoid> const& list) {
    Json j = Json::array();
    for (auto const& T : list) {
      j.push_back(T.members());
    }
    return j;
  }

  Json star_to_json(std::vector<StarWitness> const& list) {
    Json j = Json::array();
    for (auto const& w : list) {
      Json wj;
      wj["e"]       = w.idempotent;
      wj["f"]       = w.cover;
      wj["through"] = w.through;
      j.push_back(std::move(wj));
    }
    return j;
  }

  Json congruences_to_json(std::vector<ActCongruence> const& all,
                           std::vector<ActCongruence> const& strongly_flat) {
    Json j;
    j["count"] = all.size();
    Json list  = Json::array();
    for (auto const& theta : all) {
      bool sf = std::find(strongly_flat.begin(), strongly_flat.end(), theta)
                != strongly_flat.end();
      list.push_back({{"classes", theta.classes.labels()}, {"strongly_flat", sf}});
    }
    j["congruences"] = std::move(list);
    return j;
  }

  Json report_to_json(MonoidReport const& r) {
    auto const& M = *r.monoid;
    Json        j;
    j["schema"] = "acta/1";
    j["monoid"] = monoid_to_json(M);

    auto const& P          = r.predicates;
    Json        predicates;
    predicates["is_group"]              = flag_json(P.is_group);
    predicates["is_commutative"]        = flag_json(P.is_commutative);
    predicates["is_regular"]            = flag_json(P.is_regular);
    predicates["is_inverse"]            = flag_json(P.is_inverse);
    predicates["is_group_bound"]        = flag_json(P.is_group_bound);
    predicates["is_local"]              = flag_json(P.is_local);
    predicates["is_left_cancellative"]  = flag_json(P.is_left_cancellative);
    predicates["is_right_cancellative"] = flag_json(P.is_right_cancellative);
    predicates["group_of_units"]        = P.group_of_units;
    predicates["idempotents"]           = P.idempotents;
    j["predicates"]                     = std::move(predicates);

    auto const& G = r.green;
    j["green"]    = {{"R", G.R.labels()}, {"L", G.L.labels()}, {"H", G.H.labels()},
                     {"D", G.D.labels()}, {"J", G.J.labels()},
                     {"R_star", G.R_star.labels()}};

    Json small = Json::array(), big = Json::array();
    for (auto const& a : r.r_annihilators) {
      small.push_back(annihilator_json(a));
    }
    for (auto const& a : r.big_r_annihilators) {
      big.push_back(annihilator_json(a));
    }
    j["annihilators"] = {{"r", std::move(small)}, {"R", std::move(big)}};
    j["cfrs"]         = r.cfrs;

    auto const& pf = r.perfect;
    auto const& ca = pf.condition_a;
    Json        perfect;
    perfect["value"]  = pf.value;
    perfect["reason"] = pf.reason;
    perfect["condition_A"] = {{"holds", ca.holds},
                              {"reason", ca.reason},
                              {"requested_length", ca.requested_length},
                              {"length", ca.length},
                              {"sequences", ca.sequences},
                              {"window_clean", ca.window_clean}};
    if (!ca.window_clean) {
      perfect["condition_A"]["inconclusive"] = ca.inconclusive;
    }
    perfect["M_R"]                     = pf.descending_chain;
    perfect["group_bound"]             = pf.group_bound;
    perfect["minimal_left_ideals"]     = pf.minimal_left_ideals;
    perfect["left_idempotents"]        = pf.left_idempotents;
    perfect["minimal_right_ideals"]    = pf.minimal_right_ideals;
    perfect["right_idempotents"]       = pf.right_idempotents;
    perfect["isomorphic_ideals_equal"] = pf.isomorphic_ideals_equal;
    j["perfect"]                       = std::move(perfect);

    auto const& ax = r.axiomatisable;
    auto const& ex = ax.weakly_flat_and_flat;
    Json        axiomatisable;
    axiomatisable["SF"] = {{"value", ax.strongly_flat.value},
                           {"reason", ax.strongly_flat.reason}};
    axiomatisable["P"]  = {{"value", ax.projective.value},
                           {"reason", ax.projective.reason}};
    axiomatisable["Fr"] = {{"value", ax.free.value}, {"reason", ax.free.reason}};
    axiomatisable["Fr"]["star"] = star_to_json(ax.star);
    axiomatisable["WF_F"]       = {{"status", ex.status},
                                   {"bound", ex.bound},
                                   {"skeletons", ex.skeletons},
                                   {"realised", ex.realised}};
    j["axiomatisable"]          = std::move(axiomatisable);

    auto verdict = [](CompletenessVerdict const& v) {
      return Json{{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
    };
    Json complete;
    complete["SF"]                     = verdict(r.complete.strongly_flat);
    complete["P"]                      = verdict(r.complete.projective);
    complete["Fr"]                     = verdict(r.complete.free);
    complete["Fr"]["model_complete"]   = r.complete.free_model_complete;
    complete["Fr"]["categorical"]      = r.complete.free_categorical;
    j["complete"]                      = std::move(complete);

    Json cu;
    cu["status"] = r.cu_status;
    if (r.cu) {
      cu["submonoids"]       = submonoids_to_json(r.cu->cu);
      cu["idempotents"]      = r.cu->idempotent_of;
      cu["idempotent_count"] = r.cu->idempotent_count;
      cu["injective"]        = r.cu->injective;
      cu["omega_stabiliser"] = r.cu->stabiliser;
    }
    j["cu"] = std::move(cu);

    Json samples;
    samples["status"] = r.samples_status;
    if (r.samples) {
      Json acts = Json::array();
      for (auto const& s : *r.samples) {
        Json sj  = hierarchy_to_json(s.hierarchy);
        Json row = {{"name", s.name}};
        row.update(sj);
        acts.push_back(std::move(row));
      }
      samples["acts"] = std::move(acts);
    }
    j["flatness_samples"] = std::move(samples);
    return j;
  }

  std::string serialize_report(MonoidReport const& report) {
    return dump(report_to_json(report));
  }

}  // namespace acta::io
