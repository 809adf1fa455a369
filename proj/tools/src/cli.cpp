#include "infgon_cli/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "infgon/classification.hpp"
#include "infgon/graded.hpp"
#include "infgon/suites.hpp"
#include "infgon_cli/config_io.hpp"
#include "infgon_cli/render.hpp"
#include "json.hpp"

namespace infgon::cli {

namespace {

using nlohmann::json;

struct UsageError {
  std::string message;
};

struct Options {
  bool json = false;
  std::string window = "-10:10";
  std::string config;
  std::string from;
  std::string to;
  std::string a;
  std::string b;
  std::string out;
  std::optional<Int> truncation;
  std::optional<Int> target;
  Int count = 0;
  int suite = 0;
  bool highlight = false;
  std::string witness_kind;
};

// Either object syntax (X[s,d], E[n]) or arc syntax (a,b / m,inf).
IndObject parse_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && (text[first] == 'X' || text[first] == 'E')) return parse_object(text);
  return arc_to_object(parse_arc(text));
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError{std::string("missing required flag ") + flag};
  return value;
}

void emit(std::ostream& out, const Options& opt, json doc, const std::string& text) {
  if (opt.json) {
    doc["schema"] = kSchema;
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

json witness_json(const HomDim& h) {
  json w{{"clause", to_string(h.witness.clause)}};
  if (h.witness.clause == HomClause::FiniteRegion) {
    w["region"] = h.witness.region ? json(to_string(*h.witness.region)) : json(nullptr);
    w["m"] = h.witness.m;
    w["n"] = h.witness.n;
  } else if (h.witness.clause != HomClause::PruferOrder) {
    w["wedge_base"] = h.witness.wedge_base;
  }
  return w;
}

std::string witness_text(const HomDim& h) {
  std::ostringstream s;
  s << "clause " << to_string(h.witness.clause) << "\n";
  if (h.witness.clause == HomClause::FiniteRegion) {
    s << "region " << (h.witness.region ? to_string(*h.witness.region) : std::string("none")) << "\n";
    s << "m " << h.witness.m << "\nn " << h.witness.n << "\n";
  } else if (h.witness.clause != HomClause::PruferOrder) {
    s << "wedge_base " << h.witness.wedge_base << "\n";
  }
  return s.str();
}

int cmd_coord(const Options& opt, std::ostream& out) {
  const std::string text = require(opt.from, "--from");
  const IndObject x = parse_any(text);
  const Arc arc = object_to_arc(x);
  emit(out, opt, json{{"command", "coord"}, {"object", to_string(x)}, {"arc", to_string(arc)}},
       to_string(x) + " <-> " + to_string(arc) + "\n");
  return kOk;
}

int cmd_hom(const Options& opt, std::ostream& out, bool ext) {
  const IndObject a = parse_any(require(opt.from, "--from"));
  const IndObject b = parse_any(require(opt.to, "--to"));
  const HomDim h = ext ? ext_dim(a, b) : hom_dim(a, b);
  const std::string name = ext ? "Ext" : "Hom";
  json doc{{"command", ext ? "ext" : "hom"},
           {"from", to_string(a)},
           {"to", to_string(b)},
           {"dim", h.value},
           {"witness", witness_json(h)}};
  std::string text = name + "(" + to_string(a) + ", " + to_string(b) + ") = " + std::to_string(h.value) + "\n" +
                     witness_text(h);
  if (ext) {
    const CrossResult r = arcs_cross(object_to_arc(a), object_to_arc(b));
    doc["crossing"] = to_string(r);
    text += "crossing " + to_string(r) + "\n";
  }
  if (opt.truncation && !ext) {
    // Independent route through truncated towers.
    const Int n_max = *opt.truncation;
    const auto* fa = std::get_if<FiniteInd>(&a);
    const auto* fb = std::get_if<FiniteInd>(&b);
    json tower{{"truncation", n_max}};
    if (fa && fb) {
      tower["value"] = nullptr;
      text += "tower not applicable to two finite objects\n";
    } else {
      int value = 0;
      if (fa) {
        value = truncated_colim(build_hom_tower(*fa, std::get<PruferInd>(b).slot, n_max)).value;
      } else if (fb) {
        value = truncated_lim(build_inverse_hom_tower(*fb, std::get<PruferInd>(a).slot, n_max)).value;
      } else {
        value = prufer_prufer_tower(std::get<PruferInd>(a).slot, std::get<PruferInd>(b).slot, n_max);
      }
      tower["value"] = value;
      tower["agrees"] = value == h.value;
      text += "tower " + std::to_string(value) + (value == h.value ? " (agrees)" : " (DISAGREES)") + "\n";
    }
    doc["tower"] = tower;
  }
  emit(out, opt, doc, text);
  return kOk;
}

int cmd_cross(const Options& opt, std::ostream& out) {
  const Arc x = object_to_arc(parse_any(require(opt.a, "--a")));
  const Arc y = object_to_arc(parse_any(require(opt.b, "--b")));
  const CrossResult r = arcs_cross(x, y);
  emit(out, opt, json{{"command", "cross"}, {"a", to_string(x)}, {"b", to_string(y)}, {"result", to_string(r)}},
       to_string(r) + "\n");
  return kOk;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const ArcConfiguration c = load_config(require(opt.config, "--config"));
  const Window w = parse_window(opt.window);
  const Classification cl = classify(c, w);
  const std::string encoded = encode_verdict(cl);
  auto lines = lines_of(encoded);
  json witnesses = json::array();
  for (std::size_t i = 1; i < lines.size(); ++i) witnesses.push_back(lines[i].substr(std::string("WITNESS ").size()));
  emit(out, opt,
       json{{"command", "classify"},
            {"window", opt.window},
            {"verdict", to_string(cl.verdict)},
            {"reason", to_string(cl.reason)},
            {"cluster_tilting", cl.cluster_tilting},
            {"witness", witnesses}},
       encoded);
  return kOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (opt.suite == 0) {
    results = run_all_suites();
  } else {
    results.push_back(run_suite(opt.suite));
  }
  bool all = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"detail", r.detail},
                   {"seconds", r.seconds},
                   {"time_limit", r.time_limit}});
    text << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << " [" << r.seconds
         << " s]\n";
  }
  emit(out, opt, json{{"command", "check"}, {"suites", arr}, {"passed", all}}, text.str());
  return all ? kOk : kDomainError;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  const ArcConfiguration c = load_config(require(opt.config, "--config"));
  if (opt.witness_kind == "overarc") {
    OverarcTarget target;
    if (opt.target) {
      target = *opt.target;
    } else {
      target = parse_finite_arc(require(opt.a, "--a or --target"));
    }
    const FiniteArc o = strong_overarc(c, target);
    const std::string target_text = opt.target ? std::to_string(*opt.target) : to_string(Arc{std::get<FiniteArc>(target)});
    emit(out, opt, json{{"command", "witness"}, {"kind", "overarc"}, {"target", target_text}, {"overarc", to_string(Arc{o})}},
         "overarc " + to_string(Arc{o}) + "\n");
    return kOk;
  }
  if (opt.witness_kind == "antichain") {
    const FiniteArc seed = parse_finite_arc(require(opt.a, "--a"));
    const auto chain = overarc_antichain(c, seed, opt.count);
    json arr = json::array();
    std::string text;
    for (const auto& x : chain) {
      arr.push_back(to_string(Arc{x}));
      text += to_string(Arc{x}) + "\n";
    }
    emit(out, opt,
         json{{"command", "witness"},
              {"kind", "antichain"},
              {"seed", to_string(Arc{seed})},
              {"prufer", to_string(IndObject{PruferInd{-seed.a - 2}})},
              {"chain", arr}},
         text);
    return kOk;
  }
  if (opt.witness_kind == "approximation") {
    const IndObject d = parse_any(require(opt.to, "--to"));
    const ApproximationReport rep = approximation_report(c, d, parse_window(opt.window));
    json entries = json::array();
    std::ostringstream text;
    text << "kind " << to_string(rep.kind) << "\n";
    text << "target " << (rep.target ? to_string(*rep.target) + " " + to_string(object_to_arc(*rep.target)) : "0") << "\n";
    for (const auto& e : rep.entries) {
      const std::string comp = e.composite ? to_string(*e.composite) : "n/a";
      entries.push_back({{"arc", to_string(e.arc)}, {"handled", e.handled}, {"composite", comp}});
      text << "entry " << to_string(e.arc) << (e.handled ? " handled" : " exception") << " composite " << comp << "\n";
    }
    text << "exceptions " << rep.exceptions << "\n";
    emit(out, opt,
         json{{"command", "witness"},
              {"kind", "approximation"},
              {"d", to_string(d)},
              {"approximation", to_string(rep.kind)},
              {"target", rep.target ? json(to_string(*rep.target)) : json(nullptr)},
              {"fountain", rep.fountain},
              {"prufer_slot", rep.prufer_slot},
              {"entries", entries},
              {"exceptions", rep.exceptions},
              {"certified_composites", rep.certified_composites}},
         text.str());
    return kOk;
  }
  throw UsageError{"witness kind must be overarc, antichain or approximation"};
}

int cmd_render(const Options& opt, std::ostream& out) {
  const ArcConfiguration c = load_config(require(opt.config, "--config"));
  const std::string svg = render_svg(c, parse_window(opt.window), RenderOptions{opt.highlight});
  if (opt.out.empty()) {
    out << svg;
    return kOk;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file || !(file << svg)) throw DomainError("cannot write '" + opt.out + "'");
  emit(out, opt, json{{"command", "render"}, {"out", opt.out}, {"bytes", svg.size()}},
       "wrote " + opt.out + " (" + std::to_string(svg.size()) + " bytes)\n");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hom/Ext calculus and arc configurations for the A-infinity cluster category with Pruefer objects",
               "infgon"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "machine-readable output")->configurable(false);
  app.fallthrough();

  auto* coord = app.add_subcommand("coord", "convert between X[s,d]/E[n] and arcs");
  coord->add_option("--from", opt.from, "object or arc")->required();

  auto* hom = app.add_subcommand("hom", "dimension of Hom(from, to)");
  auto* ext = app.add_subcommand("ext", "dimension of Ext(from, to)");
  for (auto* sub : {hom, ext}) {
    sub->add_option("--from", opt.from, "object or arc")->required();
    sub->add_option("--to", opt.to, "object or arc")->required();
  }
  hom->add_option("--truncation", opt.truncation, "also compute through towers of this length");

  auto* cross = app.add_subcommand("cross", "crossing of two arcs");
  cross->add_option("--a", opt.a, "arc")->required();
  cross->add_option("--b", opt.b, "arc")->required();

  auto* cls = app.add_subcommand("classify", "classify a configuration");
  cls->add_option("--config", opt.config, "configuration file")->required();
  cls->add_option("--window", opt.window, "LO:HI scan window");

  auto* check = app.add_subcommand("check", "run the agreement suites");
  check->add_option("--suite", opt.suite, "only this suite (1-9)")->check(CLI::Range(1, 9));

  auto* wit = app.add_subcommand("witness", "constructive witnesses");
  wit->add_option("kind", opt.witness_kind, "overarc | antichain | approximation")
      ->required()
      ->check(CLI::IsMember({"overarc", "antichain", "approximation"}));
  wit->add_option("--config", opt.config, "configuration file")->required();
  wit->add_option("--a", opt.a, "target arc (overarc) or seed arc (antichain)");
  wit->add_option("--target", opt.target, "integer target (overarc)");
  wit->add_option("--count", opt.count, "chain length (antichain)");
  wit->add_option("--to", opt.to, "object to approximate (approximation)");
  wit->add_option("--window", opt.window, "LO:HI scan window");

  auto* render = app.add_subcommand("render", "draw a configuration as SVG");
  render->add_option("--config", opt.config, "configuration file")->required();
  render->add_option("--window", opt.window, "LO:HI drawing window");
  render->add_option("--out", opt.out, "output path (default stdout)");
  render->add_flag("--highlight", opt.highlight, "draw crossing arcs in red");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*coord) return cmd_coord(opt, out);
    if (*hom) return cmd_hom(opt, out, false);
    if (*ext) return cmd_hom(opt, out, true);
    if (*cross) return cmd_cross(opt, out);
    if (*cls) return cmd_classify(opt, out);
    if (*check) return cmd_check(opt, out);
    if (*wit) return cmd_witness(opt, out);
    if (*render) return cmd_render(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace infgon::cli
