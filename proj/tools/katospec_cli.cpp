// Command-line front end: one binary, one subcommand per operation family.
// Exit codes: 0 = computed / verdict true, 1 = verdict false, 2 = bad input.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "katospec/enumerate.hpp"
#include "katospec/exponential.hpp"
#include "katospec/json_io.hpp"
#include "katospec/ring.hpp"
#include "katospec/theorems.hpp"

namespace {

using katospec::ordered_json;

std::string slurp_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw katospec::Error(katospec::ErrorCode::BadInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json parse_input(const std::string& path) {
  return ordered_json::parse(slurp_input(path));
}

void emit(const ordered_json& j) { std::cout << katospec::dump_json(j) << "\n"; }

void require_json_mode(bool dot, const char* what) {
  if (dot)
    throw katospec::Error(katospec::ErrorCode::BadInput,
                          std::string("--dot has no graph form for ") + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra of finite commutative monoids and their topology"};
  app.require_subcommand(1);

  bool dot = false;
  bool json = false;
  app.add_flag("--json", json, "JSON output (default)");
  app.add_flag("--dot", dot, "DOT order diagram instead of JSON (spec/exp/sober)");

  std::string input;
  int exit_code = 0;

  auto* cmd_spec = app.add_subcommand("spec", "spectrum of a monoid given by its Cayley table");
  cmd_spec->fallthrough();
  cmd_spec->add_option("input", input, "monoid JSON file, or - for stdin");
  cmd_spec->callback([&] {
    auto m = katospec::monoid_from_json(parse_input(input));
    auto s = katospec::spec(m);
    if (dot)
      std::cout << katospec::to_dot(s.order);
    else
      emit(katospec::json_of(s));
  });

  auto* cmd_exp = app.add_subcommand("exp", "exponential completion of a based space");
  cmd_exp->fallthrough();
  cmd_exp->add_option("input", input, "based-space JSON file, or - for stdin");
  cmd_exp->callback([&] {
    auto a = katospec::based_space_from_json(parse_input(input));
    auto e = katospec::exponential(a);
    if (dot)
      std::cout << katospec::to_dot(katospec::specialization_order(e.based.space));
    else
      emit(katospec::json_of(e));
  });

  auto* cmd_check = app.add_subcommand("check", "run the spectral-space condition reports");
  cmd_check->fallthrough();
  cmd_check->add_option("input", input, "space JSON file, or - for stdin");
  cmd_check->callback([&] {
    require_json_mode(dot, "check");
    auto x = katospec::space_from_json(parse_input(input));
    auto brenner = katospec::brenner_report(x);
    auto hochster = katospec::hochster_report(x);
    ordered_json out;
    out["brenner"] = katospec::json_of(brenner);
    out["hochster"] = katospec::json_of(hochster);
    // The five-way equivalence sweep enumerates every space of the same size;
    // keep it to sizes where that is instant.
    if (brenner.t0 && x.size <= 4)
      out["expchar"] = katospec::json_of(katospec::exp_characterization_report(x));
    else
      out["expchar"] = nullptr;
    out["verdict"] = brenner.verdict();
    emit(out);
    exit_code = brenner.verdict() ? 0 : 1;
  });

  auto* cmd_realize = app.add_subcommand("realize", "decide whether a space is a monoid spectrum");
  cmd_realize->fallthrough();
  cmd_realize->add_option("input", input, "space JSON file, or - for stdin");
  cmd_realize->callback([&] {
    require_json_mode(dot, "realize");
    auto x = katospec::space_from_json(parse_input(input));
    auto r = katospec::classify(x);
    emit(katospec::json_of(r));
    exit_code = r.is_spectrum ? 0 : 1;
  });

  auto* cmd_sober = app.add_subcommand(
      "sober", "soberification of the down-set space of a meet-semilattice with top");
  cmd_sober->fallthrough();
  cmd_sober->add_option("input", input, "poset JSON file, or - for stdin");
  cmd_sober->callback([&] {
    auto p = katospec::poset_from_json(parse_input(input));
    auto out_space = katospec::soberify(p);
    if (dot) {
      std::cout << katospec::to_dot(katospec::specialization_order(out_space));
      return;
    }
    // Point legend: which irreducible closed set of the input space each
    // output point stands for (same numeric sort as soberify uses).
    auto irr = katospec::irreducible_closed_sets(katospec::space_from_poset(p));
    std::sort(irr.begin(), irr.end());
    ordered_json out;
    out["size"] = out_space.size;
    out["points"] = ordered_json::array();
    for (const auto& c : irr) out["points"].push_back(katospec::json_of(c));
    out["opens"] = katospec::json_of(out_space)["opens"];
    emit(out);
  });

  auto* cmd_ring = app.add_subcommand("ringspec", "prime spectrum of a product of Z/n factors");
  cmd_ring->fallthrough();
  cmd_ring->add_option("input", input, "ring JSON file, or - for stdin");
  cmd_ring->callback([&] {
    require_json_mode(dot, "ringspec");
    auto r = katospec::ring_from_json(parse_input(input));
    auto primes = katospec::ring_spec(r);
    bool unions = katospec::check_unions_of_primes(r);
    bool expok = katospec::check_exp_example(r);
    ordered_json out;
    out["size"] = r.size;
    out["primes"] = ordered_json::array();
    for (const auto& p : primes) out["primes"].push_back(katospec::json_of(p));
    out["unions_of_primes"] = unions;
    out["exp_example"] = expok;
    emit(out);
    exit_code = (unions && expok) ? 0 : 1;
  });

  auto* cmd_enum = app.add_subcommand("enumerate", "canonical monoids or posets of a given size");
  cmd_enum->fallthrough();
  int monoid_order = -1;
  int poset_size = -1;
  auto* opt_m = cmd_enum->add_option("--monoids", monoid_order, "commutative monoids of this order");
  auto* opt_p = cmd_enum->add_option("--posets", poset_size, "posets on this many points");
  opt_m->excludes(opt_p);
  cmd_enum->callback([&] {
    require_json_mode(dot, "enumerate");
    ordered_json out;
    if (monoid_order >= 0) {
      auto ms = katospec::enumerate_monoids(monoid_order);
      out["kind"] = "monoids";
      out["count"] = ms.size();
      out["items"] = ordered_json::array();
      for (const auto& m : ms) out["items"].push_back(katospec::json_of(m));
    } else if (poset_size >= 0) {
      auto ps = katospec::enumerate_posets(poset_size);
      out["kind"] = "posets";
      out["count"] = ps.size();
      out["items"] = ordered_json::array();
      for (const auto& p : ps) out["items"].push_back(katospec::json_of(p));
    } else {
      throw katospec::Error(katospec::ErrorCode::BadInput,
                            "enumerate needs --monoids N or --posets N");
    }
    emit(out);
  });

  auto* cmd_suite = app.add_subcommand("suite", "full verification sweep, deterministic for a seed");
  cmd_suite->fallthrough();
  int max_order = 5;
  int max_size = 5;
  std::uint64_t seed = 0;
  cmd_suite->add_option("--max-order", max_order, "largest monoid order (order 5 is sampled)");
  cmd_suite->add_option("--max-size", max_size, "largest space size");
  cmd_suite->add_option("--seed", seed, "sampling seed");
  cmd_suite->callback([&] {
    require_json_mode(dot, "suite");
    auto result = katospec::run_suite(max_order, max_size, seed);
    emit(katospec::json_of(result));
    exit_code = result.all_pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const katospec::Error& e) {
    ordered_json err;
    err["error"] = katospec::error_code_name(e.code);
    err["message"] = e.what();
    std::cerr << katospec::dump_json(err) << "\n";
    return 2;
  } catch (const ordered_json::exception& e) {
    ordered_json err;
    err["error"] = "JsonParse";
    err["message"] = e.what();
    std::cerr << katospec::dump_json(err) << "\n";
    return 2;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << katospec::dump_json(err) << "\n";
    return 2;
  }
  return exit_code;
}
