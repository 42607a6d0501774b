#include "acta/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "acta/classify.hpp"
#include "acta/error.hpp"
#include "acta/io.hpp"

namespace acta {

  namespace {

    namespace fs = std::filesystem;
    using io::Json;

    struct CliConfig {
      std::string              command;
      std::vector<std::string> inputs;
      std::size_t              m_max    = 2;
      std::size_t              cu_cap   = 16;
      std::size_t              cong_cap = 8;
      std::string              pair;
      std::string              format = "json";
      std::string              out_path;
    };

    struct Output {
      std::string text;
      int         code = exit_ok;
    };

    MonoidPtr load_monoid(std::string const& path) {
      return share(io::parse_monoid(io::read_file(path)));
    }

    FiniteAct load_act(std::string const& path, MonoidPtr const& M) {
      return io::act_from_json(io::parse_json(io::read_file(path)), M,
                               fs::path(path).parent_path());
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string set_text(FiniteMonoid const& M, std::vector<Element> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + M.label(xs[i]);
      }
      return out + "}";
    }

    std::string list_text(std::vector<Element> const& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? " " : "") + std::to_string(xs[i]);
      }
      return out;
    }

    std::string hierarchy_text(ActHierarchy const& H) {
      std::ostringstream o;
      o << "free: " << yes_no(H.free_projective.is_free) << "\n"
        << "projective: " << yes_no(H.free_projective.is_projective) << "\n"
        << "strongly flat: " << yes_no(H.strongly_flat) << "\n"
        << "flat: " << to_string(H.flat.status) << " (bound " << H.flat.bound
        << ")\n";
      if (H.flat.witness) {
        o << "  skeleton " << list_text(H.flat.witness->skeleton.entries())
          << ", chain " << list_text(H.flat.witness->right_chain) << "\n";
      }
      o << "weakly flat: " << yes_no(H.weakly_flat.holds) << "\n";
      return o.str();
    }

    Output cmd_analyze(CliConfig const& cfg) {
      auto M = load_monoid(cfg.inputs.at(0));
      AnalyzeOptions options;
      options.m_max  = cfg.m_max;
      options.cu_cap = cfg.cu_cap;
      auto report    = analyze(M, options);
      if (cfg.format == "json") {
        return {io::serialize_report(report)};
      }
      auto const&        m = *M;
      auto const&        P = report.predicates;
      std::ostringstream o;
      o << "monoid: order " << m.order() << ", identity " << m.label(m.identity())
        << "\n"
        << "group " << yes_no(P.is_group.value) << ", commutative "
        << yes_no(P.is_commutative.value) << ", regular "
        << yes_no(P.is_regular.value) << ", inverse " << yes_no(P.is_inverse.value)
        << ", local " << yes_no(P.is_local.value) << "\n"
        << "green: R " << report.green.R.num_classes() << ", L "
        << report.green.L.num_classes() << ", H " << report.green.H.num_classes()
        << ", D " << report.green.D.num_classes() << ", J "
        << report.green.J.num_classes() << " classes\n"
        << "cfrs:";
      for (Element s = 0; s < m.order(); ++s) {
        o << " " << m.label(s) << "=" << report.cfrs[s];
      }
      auto const& ax = report.axiomatisable;
      o << "\nleft perfect: " << yes_no(report.perfect.value) << "\n"
        << "axiomatisable: SF " << yes_no(ax.strongly_flat.value) << ", P "
        << yes_no(ax.projective.value) << ", Fr " << yes_no(ax.free.value)
        << "; WF/F " << ax.weakly_flat_and_flat.status << "\n"
        << "complete: SF " << to_string(report.complete.strongly_flat.verdict)
        << ", P " << to_string(report.complete.projective.verdict) << ", Fr "
        << to_string(report.complete.free.verdict) << "\n";
      if (report.cu) {
        o << "cu:";
        for (auto const& U : report.cu->cu) {
          o << " " << set_text(m, U.members());
        }
        o << "\n";
      } else {
        o << "cu: " << report.cu_status << "\n";
      }
      if (report.samples) {
        for (auto const& s : *report.samples) {
          o << "sample " << s.name << ": free " << yes_no(s.hierarchy.free_projective.is_free)
            << ", projective " << yes_no(s.hierarchy.free_projective.is_projective)
            << ", strongly flat " << yes_no(s.hierarchy.strongly_flat) << ", flat "
            << to_string(s.hierarchy.flat.status) << ", weakly flat "
            << yes_no(s.hierarchy.weakly_flat.holds) << "\n";
        }
      } else {
        o << "flatness samples: " << report.samples_status << "\n";
      }
      return {o.str()};
    }

    Output cmd_classify_act(CliConfig const& cfg) {
      auto M = load_monoid(cfg.inputs.at(0));
      auto B = load_act(cfg.inputs.at(1), M);
      if (B.side() != Side::left) {
        throw Error(ErrorKind::side_mismatch, "classify-act needs a left act");
      }
      auto   H = classify_act(B, cfg.m_max);
      Output result{cfg.format == "json" ? io::dump(io::hierarchy_to_json(H))
                                         : hierarchy_text(H)};
      if (!H.monotone) {
        result.code = exit_consistency;
      }
      return result;
    }

    std::pair<ActPair, ActPair> parse_pair(std::string const& text) {
      static std::regex const pattern(R"(\s*(\d+)\s*,\s*(\d+)\s*/\s*(\d+)\s*,\s*(\d+)\s*)");
      std::smatch             m;
      if (!std::regex_match(text, m, pattern)) {
        throw Error(ErrorKind::syntax, "--pair: expected a,b/a',b' with indices");
      }
      auto num = [&](int i) { return static_cast<Element>(std::stoul(m[i].str())); };
      return {{num(1), num(2)}, {num(3), num(4)}};
    }

    Output cmd_tensor(CliConfig const& cfg) {
      auto M = load_monoid(cfg.inputs.at(0));
      auto A = load_act(cfg.inputs.at(1), M);
      auto B = load_act(cfg.inputs.at(2), M);
      auto T = tensor(A, B);
      std::optional<std::pair<ActPair, ActPair>> query;
      std::optional<Tossing>                     witness;
      if (!cfg.pair.empty()) {
        query   = parse_pair(cfg.pair);
        witness = tensor_equal(A, B, query->first, query->second);
      }
      if (cfg.format == "json") {
        Json j = io::tensor_to_json(T);
        if (query) {
          j["pair"]  = {{query->first.first, query->first.second},
                        {query->second.first, query->second.second}};
          j["equal"] = witness.has_value();
          if (witness) {
            j["tossing"] = io::tossing_to_json(*witness);
          }
        }
        return {io::dump(j)};
      }
      std::ostringstream o;
      o << "classes: " << T.num_classes() << "\n";
      for (auto const& cls : T.class_members()) {
        o << " ";
        for (auto [a, b] : cls) {
          o << " (" << A.label(a) << "," << B.label(b) << ")";
        }
        o << "\n";
      }
      if (query) {
        if (witness) {
          o << "equal; tossing of length " << witness->skeleton.length()
            << ": skeleton " << list_text(witness->skeleton.entries())
            << "; left chain " << list_text(witness->left_chain)
            << "; right chain " << list_text(witness->right_chain) << "\n";
        } else {
          o << "not equal\n";
        }
      }
      return {o.str()};
    }

    Output cmd_cu(CliConfig const& cfg) {
      auto M     = load_monoid(cfg.inputs.at(0));
      auto omega = omega_report(*M, cfg.cu_cap);
      if (cfg.format == "json") {
        Json j;
        j["submonoids"]       = io::submonoids_to_json(omega.cu);
        j["idempotents"]      = omega.idempotent_of;
        j["idempotent_count"] = omega.idempotent_count;
        j["injective"]        = omega.injective;
        j["omega_stabiliser"] = omega.stabiliser;
        return {io::dump(j)};
      }
      std::ostringstream o;
      for (std::size_t i = 0; i < omega.cu.size(); ++i) {
        o << set_text(*M, omega.cu[i].members()) << " -> "
          << M->label(omega.idempotent_of[i]) << "\n";
      }
      o << omega.cu.size() << " of " << omega.idempotent_count
        << " idempotents used; injective " << yes_no(omega.injective) << "\n";
      return {o.str()};
    }

    Output cmd_witness(CliConfig const& cfg) {
      auto M    = load_monoid(cfg.inputs.at(0));
      auto star = star_witness(*M);
      if (cfg.format == "json") {
        return {io::dump(io::star_to_json(star))};
      }
      std::ostringstream o;
      for (auto const& w : star) {
        o << "e=" << M->label(w.idempotent) << ": f=" << set_text(*M, w.cover) << "\n";
      }
      if (star.empty()) {
        o << "no idempotent other than 1\n";
      }
      return {o.str()};
    }

    Output cmd_from_dfa(CliConfig const& cfg) {
      auto source = io::read_file(cfg.inputs.at(0));
      auto j      = io::parse_json(source);
      auto G      = j.contains("degree") ? io::transformation_monoid(io::parse_transformations(source))
                                         : io::transition_monoid(io::parse_dfa(source));
      if (cfg.format == "json") {
        return {io::dump(io::generated_to_json(G))};
      }
      std::ostringstream o;
      o << io::monoid_to_text(G.monoid);
      for (std::size_t i = 0; i < G.words.size(); ++i) {
        o << i << " " << G.words[i] << "\n";
      }
      return {o.str()};
    }

    Output cmd_congruences(CliConfig const& cfg) {
      auto M   = load_monoid(cfg.inputs.at(0));
      auto all = left_congruences(*M, cfg.cong_cap);
      auto sf  = strongly_flat_left_congruences(*M, cfg.cong_cap);
      if (cfg.format == "json") {
        return {io::dump(io::congruences_to_json(all, sf))};
      }
      std::ostringstream o;
      for (auto const& theta : all) {
        bool flat = std::find(sf.begin(), sf.end(), theta) != sf.end();
        o << list_text(theta.classes.labels()) << (flat ? "  strongly flat" : "")
          << "\n";
      }
      o << all.size() << " left congruences, " << sf.size() << " strongly flat\n";
      return {o.str()};
    }

    int exit_for(ErrorKind kind) {
      switch (error_class(kind)) {
        case ErrorClass::io: return exit_io;
        case ErrorClass::cap: return exit_cap;
        case ErrorClass::consistency: return exit_consistency;
        case ErrorClass::validation: return exit_validation;
      }
      return exit_validation;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"Finite monoids and their acts", "acta"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--m-max", cfg.m_max, "skeleton length bound for flatness")
          ->check(CLI::PositiveNumber);
      sub->add_option("--format", cfg.format, "output format")
          ->check(CLI::IsMember({"json", "text"}));
      sub->add_option("--out", cfg.out_path, "write output to this file");
    };
    struct Spec {
      char const*                      name;
      char const*                      help;
      std::vector<char const*>         inputs;
      Output (*run)(CliConfig const&);
    };
    std::vector<Spec> const specs{
        {"analyze", "full structural report of a monoid", {"monoid"}, cmd_analyze},
        {"classify-act", "free/projective/flat verdicts for a left act",
         {"monoid", "act"}, cmd_classify_act},
        {"tensor", "tensor product of a right and a left act",
         {"monoid", "right_act", "left_act"}, cmd_tensor},
        {"cu", "right collapsible right unitary submonoids", {"monoid"}, cmd_cu},
        {"witness", "finite sets f for condition (*)", {"monoid"}, cmd_witness},
        {"from-dfa", "transition monoid of a DFA or transformation set",
         {"automaton"}, cmd_from_dfa},
        {"congruences", "left congruences and the strongly flat ones",
         {"monoid"}, cmd_congruences},
    };
    std::vector<std::string> positional(3);
    std::map<CLI::App*, Spec const*> by_app;
    for (auto const& spec : specs) {
      auto* sub = app.add_subcommand(spec.name, spec.help);
      for (std::size_t i = 0; i < spec.inputs.size(); ++i) {
        sub->add_option(spec.inputs[i], positional[i], "input file")->required();
      }
      add_common(sub);
      sub->add_option("--cu-cap", cfg.cu_cap, "largest order for CU enumeration")
          ->check(CLI::PositiveNumber);
      sub->add_option("--cong-cap", cfg.cong_cap,
                      "largest order for congruence enumeration")
          ->check(CLI::PositiveNumber);
      if (std::string(spec.name) == "tensor") {
        sub->add_option("--pair", cfg.pair, "query a,b/a',b'");
      }
      by_app[sub] = &spec;
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_validation;
    }

    auto*       sub  = app.get_subcommands().front();
    auto const& spec = *by_app.at(sub);
    cfg.command      = spec.name;
    cfg.inputs.assign(positional.begin(),
                      positional.begin() + static_cast<std::ptrdiff_t>(spec.inputs.size()));
    try {
      auto result = spec.run(cfg);
      if (cfg.out_path.empty()) {
        out << result.text;
      } else {
        io::write_file(cfg.out_path, result.text);
      }
      if (result.code == exit_consistency) {
        err << "error: hierarchy verdicts are not monotone\n";
      }
      return result.code;
    } catch (Error const& e) {
      err << "error: " << e.what();
      if (!e.witness().empty()) {
        err << " [witness";
        for (auto w : e.witness()) {
          err << " " << w;
        }
        err << "]";
      }
      err << "\n";
      return exit_for(e.kind());
    }
  }

}  // namespace acta
