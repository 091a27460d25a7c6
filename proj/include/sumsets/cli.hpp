#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sumsets/scan.hpp"

namespace sumsets {

namespace detail {

// Sets arrive as JSON arrays of coordinate arrays, or as the "0,1,4"
// shorthand for rank-1 groups.
inline GroupSubset parse_set_arg(const GroupPtr& g, const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed[0] == '[') {
    Json j = Json::parse(trimmed, nullptr, false);
    require(!j.is_discarded(), ErrorKind::Parse, "set is not valid JSON: " + text);
    return set_from_json(g, j);
  }
  require(g->moduli().size() == 1, ErrorKind::Parse,
          "comma shorthand is only available for rank-1 groups");
  GroupSubset s(g);
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    require(!tok.empty(), ErrorKind::Parse, "empty element in set shorthand");
    s.bits_mut().set(g->id_from_coords({std::stoi(tok)}));
  }
  require(!s.empty(), ErrorKind::Parse, "set must not be empty");
  return s;
}

inline int parse_element_arg(const GroupPtr& g, const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed[0] == '[') {
    Json j = Json::parse(trimmed, nullptr, false);
    require(!j.is_discarded(), ErrorKind::Parse, "element is not valid JSON: " + text);
    return element_from_json(*g, j);
  }
  require(g->moduli().size() == 1, ErrorKind::Parse,
          "bare integer elements are only available for rank-1 groups");
  return g->id_from_coords({std::stoi(trimmed)});
}

inline std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',' ))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

}  // namespace detail

// Command-line front end; returns the process exit code.  Exit 0: success
// with a JSON report on stdout.  Exit 1: precondition/hypothesis/domain
// errors, machine-readable error JSON.  Exit 2: usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"sumset-kit: structure theory of small sumsets in finite abelian groups"};
  app.require_subcommand(1);

  std::string group_spec, a_text, b_text, cert_path, theorem_id, modes_text;
  std::string catalog_text, suites_text = "all", out_path;
  std::string f_text, h_text, s_text, shift_text, removed_text = "[]";
  uint64_t seed = 0;
  int max_order = 512, jobs = 1;
  bool want_tree = false;

  auto* analyze = app.add_subcommand("analyze", "sumset, period, mu, witnesses, certificates");
  analyze->add_option("--group", group_spec)->required();
  analyze->add_option("--A", a_text)->required();
  analyze->add_option("--B", b_text)->required();
  analyze->add_option("--decompose", modes_text, "comma list of kemperman,dual,me");

  auto* classify = app.add_subcommand("classify", "elementary pair witnesses");
  classify->add_option("--group", group_spec)->required();
  classify->add_option("--A", a_text)->required();
  classify->add_option("--B", b_text)->required();

  auto* decompose = app.add_subcommand("decompose", "certificate for one theorem");
  decompose->add_option("--group", group_spec)->required();
  decompose->add_option("--A", a_text)->required();
  decompose->add_option("--B", b_text)->required();
  decompose->add_option("--mode", modes_text, "kemperman|dual|me")->required();
  decompose->add_flag("--tree", want_tree, "emit the full decomposition tree");

  auto* verify = app.add_subcommand("verify", "check one named theorem");
  verify->add_option("--group", group_spec)->required();
  verify->add_option("--A", a_text)->required();
  verify->add_option("--B", b_text)->required();
  verify->add_option("--theorem", theorem_id)->required();

  auto* checkcert = app.add_subcommand("check-cert", "validate a certificate file");
  checkcert->add_option("--group", group_spec)->required();
  checkcert->add_option("--A", a_text)->required();
  checkcert->add_option("--B", b_text)->required();
  checkcert->add_option("--cert", cert_path)->required();

  auto* scan = app.add_subcommand("scan", "exhaustive catalog verification");
  scan->add_option("--catalog", catalog_text)->required();
  scan->add_option("--suite", suites_text, "comma list of suites, or 'all'");
  scan->add_option("--seed", seed);
  scan->add_option("--max-order", max_order);
  scan->add_option("--jobs", jobs);
  scan->add_option("--out", out_path);

  auto* synth = app.add_subcommand("synth", "build a small-doubling set from (F,H,S)");
  synth->add_option("--group", group_spec)->required();
  synth->add_option("--F", f_text)->required();
  synth->add_option("--H", h_text)->required();
  synth->add_option("--S", s_text)->required();
  synth->add_option("--shift", shift_text);
  synth->add_option("--removed", removed_text);

  try {
    std::vector<const char*> argv;
    argv.push_back("sumset-kit");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      GroupPtr g = parse_group(group_spec);
      GroupSubset A = detail::parse_set_arg(g, a_text);
      GroupSubset B = detail::parse_set_arg(g, b_text);
      Json report;
      report["group"] = json_group(*g);
      report["A"] = json_set(A);
      report["B"] = json_set(B);
      report["sumset"] = json_set(sumset(A, B));
      report["period"] = json_subgroup(period(sumset(A, B)));
      report["mu"] = min_rep(A, B);
      auto witnesses = classify_elementary(A, B);
      Json warr = Json::array();
      for (const auto& w : witnesses) warr.push_back(json_witness(*g, w));
      report["elementary"] = Json{{"witnesses", warr},
                                  {"canonical_type", canonical_type(witnesses)}};
      if (!modes_text.empty()) {
        Json certs = Json::object();
        for (const std::string& mode : detail::split_csv(modes_text)) {
          if (mode == "kemperman") {
            KempermanCertificate c = kemperman_decompose(A, B);
            require(check_certificate(A, B, c).ok, ErrorKind::Internal,
                    "emitted certificate failed re-validation");
            certs["kemperman"] = json_certificate(*g, c);
          } else if (mode == "dual") {
            DualCertificate c = dual_decompose(A, B);
            require(check_certificate(A, B, c).ok, ErrorKind::Internal,
                    "emitted certificate failed re-validation");
            certs["dual"] = json_certificate(*g, c);
          } else if (mode == "me") {
            MeCertificate c = me_decompose(A, B);
            require(check_certificate(A, B, c).ok, ErrorKind::Internal,
                    "emitted certificate failed re-validation");
            certs["me"] = json_certificate(*g, c);
          } else {
            throw_usage("unknown decompose mode '" + mode + "'");
          }
        }
        report["certificates"] = certs;
      }
      Json ver = Json::object();
      for (const char* id :
           {"kneser", "kemperman_scherk", "corollary_half", "equality_claim"})
        ver[id] = json_report(verify_theorem(id, A, B));
      report["verification"] = ver;
      auto t1 = std::chrono::steady_clock::now();
      report["duration_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      out << report.dump(2) << "\n";
      return 0;
    }

    if (classify->parsed()) {
      GroupPtr g = parse_group(group_spec);
      GroupSubset A = detail::parse_set_arg(g, a_text);
      GroupSubset B = detail::parse_set_arg(g, b_text);
      auto witnesses = classify_elementary(A, B);
      Json warr = Json::array();
      for (const auto& w : witnesses) warr.push_back(json_witness(*g, w));
      out << Json{{"witnesses", warr}, {"canonical_type", canonical_type(witnesses)}}.dump(2)
          << "\n";
      return 0;
    }

    if (decompose->parsed()) {
      GroupPtr g = parse_group(group_spec);
      GroupSubset A = detail::parse_set_arg(g, a_text);
      GroupSubset B = detail::parse_set_arg(g, b_text);
      const std::string& mode = modes_text;
      if (want_tree) {
        require(mode == "kemperman" || mode == "dual", ErrorKind::Usage,
                "--tree supports modes kemperman and dual");
        auto tree = decomposition_tree(
            A, B, mode == "kemperman" ? DecomposeMode::Kemperman : DecomposeMode::Dual);
        out << Json{{"tree", json_tree(*tree)}}.dump(2) << "\n";
        return 0;
      }
      Json cert;
      if (mode == "kemperman") cert = json_certificate(*g, kemperman_decompose(A, B));
      else if (mode == "dual") cert = json_certificate(*g, dual_decompose(A, B));
      else if (mode == "me") cert = json_certificate(*g, me_decompose(A, B));
      else throw_usage("unknown decompose mode '" + mode + "'");
      out << cert.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      GroupPtr g = parse_group(group_spec);
      GroupSubset A = detail::parse_set_arg(g, a_text);
      GroupSubset B = detail::parse_set_arg(g, b_text);
      out << json_report(verify_theorem(theorem_id, A, B)).dump(2) << "\n";
      return 0;
    }

    if (checkcert->parsed()) {
      GroupPtr g = parse_group(group_spec);
      GroupSubset A = detail::parse_set_arg(g, a_text);
      GroupSubset B = detail::parse_set_arg(g, b_text);
      std::ifstream in(cert_path);
      require(in.good(), ErrorKind::Usage, "cannot read certificate file " + cert_path);
      Json j = Json::parse(in, nullptr, false);
      require(!j.is_discarded(), ErrorKind::Parse, "certificate file is not valid JSON");
      std::string kind = j.at("kind").get<std::string>();
      CertCheckResult result;
      if (kind == "kemperman")
        result = check_certificate(A, B, kemperman_certificate_from_json(g, j));
      else if (kind == "dual")
        result = check_certificate(A, B, dual_certificate_from_json(g, j));
      else if (kind == "me")
        result = check_certificate(A, B, me_certificate_from_json(g, j));
      else
        throw_parse("unknown certificate kind '" + kind + "'");
      out << json_check_result(result).dump(2) << "\n";
      return result.ok ? 0 : 1;
    }

    if (scan->parsed()) {
      ScanConfig cfg;
      cfg.catalog = detail::split_csv(catalog_text);
      require(!cfg.catalog.empty(), ErrorKind::Usage, "empty catalog");
      if (suites_text != "all") cfg.suites = detail::split_csv(suites_text);
      cfg.seed = seed;
      cfg.max_order = max_order;
      cfg.jobs = jobs;
      std::string jsonl = scan_to_jsonl(cfg);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        require(f.good(), ErrorKind::Usage, "cannot write " + out_path);
        f << jsonl;
        // echo only the summary line to stdout
        size_t pos = jsonl.rfind('\n', jsonl.size() - 2);
        out << jsonl.substr(pos == std::string::npos ? 0 : pos + 1);
      } else {
        out << jsonl;
      }
      std::string last = jsonl.substr(jsonl.rfind('\n', jsonl.size() - 2) + 1);
      Json summary = Json::parse(last);
      return summary["violations"].get<long long>() == 0 ? 0 : 1;
    }

    if (synth->parsed()) {
      GroupPtr g = parse_group(group_spec);
      Subgroup F = Subgroup::from_set(detail::parse_set_arg(g, f_text));
      Subgroup H = Subgroup::from_set(detail::parse_set_arg(g, h_text));
      GroupSubset S = detail::parse_set_arg(g, s_text);
      int shift_elem = shift_text.empty() ? 0 : detail::parse_element_arg(g, shift_text);
      GroupSubset removed(g);
      {
        Json j = Json::parse(removed_text, nullptr, false);
        require(!j.is_discarded(), ErrorKind::Parse, "--removed is not valid JSON");
        removed = set_from_json(g, j);
      }
      auto [A, predicted] = struct_synthesize(F, H, S, shift_elem, removed);
      out << Json{{"A", json_set(A)},
                  {"predicted_doubling", predicted},
                  {"doubling", double_set(A).size()}}.dump(2)
          << "\n";
      return 0;
    }
  } catch (const Error& e) {
    Json ej{{"error", Json{{"kind", e.kind_name()}, {"message", e.what()}}}};
    out << ej.dump(2) << "\n";
    return e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    Json ej{{"error", Json{{"kind", "internal"}, {"message", e.what()}}}};
    out << ej.dump(2) << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sumsets
