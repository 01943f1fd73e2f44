#include "skein/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/colored.hpp"
#include "skein/errors.hpp"
#include "skein/harness.hpp"
#include "skein/hecke.hpp"
#include "skein/oracles.hpp"
#include "skein/special.hpp"

namespace skein::cli {

namespace {

using nlohmann::json;

// Input problems found before any computation starts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BraidWord braid_arg(const std::string& text) {
  if (auto named = named_braid(text)) return *named;
  try {
    BraidWord b = parse_braid(text);
    b.validate();
    return b;
  } catch (const SkeinError& e) {
    throw UsageError(std::string("bad braid: ") + e.what());
  }
}

std::vector<Partition> colors_arg(const std::string& text) {
  std::vector<Partition> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ';')) out.push_back(Partition::parse(item));
  } catch (const SkeinError& e) {
    throw UsageError(std::string("bad colors: ") + e.what());
  }
  if (out.empty()) throw UsageError("bad colors: no partitions given");
  return out;
}

std::vector<int> ints_arg(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

void strip_timings(json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timings(v);
  }
}

json link_header(const std::string& command, const LinkPresentation& L) {
  return {{"command", command}, {"braid", format_braid(L.braid)}, {"link", L.to_json()}};
}

ColoredLink colored_from(const BraidWord& b, const std::vector<Partition>& colors) {
  LinkPresentation L = analyze_closure(b);
  if (colors.size() == 1 && L.num_components() > 1)
    return ColoredLink{L, std::vector<Partition>(static_cast<size_t>(L.num_components()), colors[0])};
  if (static_cast<int>(colors.size()) != L.num_components())
    throw UsageError("need " + std::to_string(L.num_components()) + " colors, got " + std::to_string(colors.size()));
  return ColoredLink{L, colors};
}

json colored_json(const std::string& command, const ColoredLink& cl, const Scalar& value) {
  json j = link_header(command, cl.link);
  json cs = json::array();
  for (const auto& c : cl.colors) cs.push_back(c.parts());
  j["colors"] = cs;
  auto d = value.fdeg();
  j["fdeg"] = d ? json(*d) : json(nullptr);
  j["value"] = value.to_json();
  j["text"] = value.str();
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Colored HOMFLY-PT invariants and their specializations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  int bits = kDefaultBits;
  bool timings = false;
  app.add_option("--out", out_path, "write JSON here instead of stdout");
  app.add_option("--bits", bits, "working precision for root-of-unity evaluation")->check(CLI::Range(64, 4096));
  app.add_flag("--timings", timings, "keep runtimes in verification reports");

  std::string braid, colors_text = "1", ints_text;
  int cut = 1, N = 2, m = 2, a = 1;
  std::string suite;

  auto* homfly = app.add_subcommand("homfly", "framed HOMFLY-PT of a braid closure");
  homfly->add_option("braid", braid, "BR[n; g ...] or a catalogue name")->required();

  auto* colored = app.add_subcommand("colored", "colored HOMFLY-PT");
  colored->add_option("braid", braid)->required();
  colored->add_option("--colors", colors_text, "partitions per component, e.g. 2,1;1")->required();

  auto* reduced = app.add_subcommand("reduced", "reduced colored HOMFLY-PT");
  reduced->add_option("braid", braid)->required();
  reduced->add_option("--colors", colors_text)->required();
  reduced->add_option("--cut", cut, "component left open (1-based)");

  auto* kashaev_cmd = app.add_subcommand("kashaev", "Kashaev invariant K_N");
  kashaev_cmd->add_option("braid", braid)->required();
  kashaev_cmd->add_option("--N", N)->required()->check(CLI::Range(2, 64));

  auto* msl = app.add_subcommand("msl", "sl(m|1) invariant at integer colors");
  msl->add_option("braid", braid)->required();
  msl->add_option("--m", m)->required()->check(CLI::Range(2, 16));
  msl->add_option("--colors", ints_text)->required();

  auto* lg = app.add_subcommand("lg", "Links-Gould invariant at tau = q^-a");
  lg->add_option("braid", braid)->required();
  lg->add_option("--m", m)->required()->check(CLI::Range(2, 16));
  lg->add_option("--a", a)->required()->check(CLI::Range(1, 64));

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial (multivariable for links)");
  alex->add_option("braid", braid)->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "suite name or 'all'")->required();

  auto emit = [&](const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text << std::flush;
    } else {
      std::ofstream f(out_path);
      if (!f) throw UsageError("cannot write " + out_path);
      f << text;
    }
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_json("UsageError", e.what()).dump(2) << "\n";
    return kExitUsage;
  }

  try {
    if (homfly->parsed()) {
      const LinkPresentation L = analyze_closure(braid_arg(braid));
      const Scalar h = markov_eval(hecke_from_braid(L.braid));
      json j = link_header("homfly", L);
      auto d = h.fdeg();
      j["fdeg"] = d ? json(*d) : json(nullptr);
      j["value"] = h.to_json();
      j["text"] = h.str();
      emit(j);
    } else if (colored->parsed() || reduced->parsed()) {
      const ColoredLink cl = colored_from(braid_arg(braid), colors_arg(colors_text));
      if (reduced->parsed()) {
        if (cut < 1 || cut > cl.link.num_components()) throw UsageError("--cut out of range");
        json j = colored_json("reduced", cl, reduced_colored_homfly(cl, cut - 1));
        j["cut"] = cut;
        emit(j);
      } else {
        emit(colored_json("colored", cl, colored_homfly(cl)));
      }
    } else if (kashaev_cmd->parsed()) {
      const LinkPresentation L = analyze_closure(braid_arg(braid));
      const QFraction f = kashaev_fraction(L, N);
      json j = link_header("kashaev", L);
      j["N"] = N;
      j["fraction"] = f.to_json();
      j["fraction_text"] = f.str();
      j["value"] = eval_root(f, N, false, bits).to_json();
      emit(j);
    } else if (msl->parsed()) {
      const LinkPresentation L = analyze_closure(braid_arg(braid));
      std::vector<int> cs = ints_arg(ints_text);
      if (cs.size() == 1 && L.num_components() > 1) cs.assign(static_cast<size_t>(L.num_components()), cs[0]);
      if (static_cast<int>(cs.size()) != L.num_components()) throw UsageError("need one color per component");
      json j = link_header("msl", L);
      j["result"] = m_invariant(L, m, cs).to_json();
      emit(j);
    } else if (lg->parsed()) {
      const LinkPresentation L = analyze_closure(braid_arg(braid));
      const QFraction v = links_gould(L, m, a);
      json j = link_header("lg", L);
      j["m"] = m;
      j["a"] = a;
      j["value"] = v.to_json();
      j["text"] = v.str();
      j["paths_agree"] = v == links_gould_direct(L, m, a);
      j["at_root"] = eval_root(v, m, false, bits).to_json();
      emit(j);
    } else if (alex->parsed()) {
      const LinkPresentation L = analyze_closure(braid_arg(braid));
      json j = link_header("alexander", L);
      if (L.num_components() == 1) {
        j["alexander"] = alexander_knot(L.braid).to_json();
        j["conway"] = conway_knot(L.braid).to_json();
      } else {
        j["alexander"] = multivariable_alexander(L).to_json();
      }
      emit(j);
    } else if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
          throw UsageError("unknown suite '" + suite + "'");
        names = {suite};
      }
      json suites = json::array();
      bool pass = true;
      for (const auto& n : names) {
        SuiteResult r = run_suite(n, bits);
        pass = pass && r.pass;
        suites.push_back(r.to_json());
      }
      json j{{"command", "verify"}, {"suites", suites}, {"pass", pass}};
      if (!timings) strip_timings(j);
      emit(j);
      return pass ? kExitOk : kExitVerification;
    }
  } catch (const UsageError& e) {
    emit(error_json("UsageError", e.what()));
    return kExitUsage;
  } catch (const SkeinError& e) {
    emit(error_json(kind_name(e.kind()), e.what()));
    return kExitComputation;
  } catch (const std::exception& e) {
    emit(error_json("InternalError", e.what()));
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace skein::cli
