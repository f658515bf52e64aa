// flagcalc command-line front end. All computation goes through the C API;
// this file only parses arguments and renders the returned JSON as text.

#include "flagcalc/flagcalc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Failure {
  fc_status status;
  std::string message;
};

void check(fc_status s) {
  if (s != FC_OK) throw Failure{s, fc_last_error()};
}

Json take(char* s) {
  Json j = Json::parse(s);
  fc_string_free(s);
  return j;
}

std::string take_text(char* s) {
  std::string out = s;
  fc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{FC_ERR_INVALID, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CatalogHandle {
  fc_catalog* ptr = nullptr;
  explicit CatalogHandle(const std::string& path) {
    if (path.empty()) check(fc_catalog_builtin(&ptr));
    else check(fc_catalog_load(path.c_str(), &ptr));
  }
  ~CatalogHandle() { fc_catalog_free(ptr); }
  CatalogHandle(const CatalogHandle&) = delete;
  CatalogHandle& operator=(const CatalogHandle&) = delete;
};

struct RingHandle {
  fc_ring* ptr = nullptr;
  explicit RingHandle(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe) check(fc_ring_parse(read_file(spec).c_str(), &ptr));
    else check(fc_ring_builtin(spec.c_str(), &ptr));
  }
  ~RingHandle() { fc_ring_free(ptr); }
  RingHandle(const RingHandle&) = delete;
  RingHandle& operator=(const RingHandle&) = delete;
};

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string join(const Json& arr, const char* sep = ", ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += str(x);
  }
  return out;
}

void print_verdict(const Json& v, std::ostream& os, const std::string& indent = "") {
  os << indent << "outcome: " << str(v["outcome"]) << "\n";
  os << indent << "rule: " << str(v["rule"]) << "\n";
  for (const auto& w : v["witnesses"])
    os << indent << "  " << str(w["name"]) << ": " << str(w["lhs"]) << " " << str(w["relation"]) << " "
       << str(w["rhs"]) << "\n";
  if (!v["note"].get<std::string>().empty()) os << indent << "note: " << str(v["note"]) << "\n";
}

void print_info(const Json& j, std::ostream& os) {
  os << j["variety"].get<std::string>() << "\n";
  os << "  type: " << str(j["type"]) << ", marked: {" << join(j["marked"]) << "}\n";
  os << "  dimension: " << j["dimension"] << ", positive roots: " << j["positive_roots"] << "\n";
  if (j["catalog"].is_null()) {
    os << "  VMRT: not covered (" << str(j["not_covered"]) << ")\n";
    return;
  }
  const Json& c = j["catalog"];
  os << "  name: " << str(c["name"]) << " (row " << c["row"] << ", " << str(c["row_id"]) << ")\n";
  os << "  VMRT: " << str(c["vmrt"]["text"]) << ", dimension " << c["vmrt"]["dimension"] << "\n";
  os << "  a: " << c["a"] << "\n";
  os << "  e.d.(VMRT): " << c["ed"]["value"] << " [" << str(c["ed"]["provenance"]) << "]\n";
  if (!c["ed"]["gd"].is_null()) os << "  g.d.(VMRT): " << c["ed"]["gd"] << "\n";
}

void print_ring_summary(const Json& j, std::ostream& os) {
  os << "ring " << str(j["name"]) << "\n  generators:";
  for (const auto& g : j["generators"]) os << " " << str(g["name"]) << ":" << g["degree"];
  os << "\n  relations:\n";
  for (const auto& r : j["relations"]) os << "    " << str(r) << "\n";
  os << "  top degree: " << j["top_degree"] << "\n";
  os << "  Hilbert series: " << join(j["hilbert_series"]) << "\n";
  os << "  total dimension: " << j["total_dimension"] << "\n";
}

void print_ring_degree(const Json& j, std::ostream& os) {
  os << "ring " << str(j["ring"]) << ", degree " << j["degree"] << "\n";
  os << "  graded piece dimension: " << j["dimension"] << "\n";
  os << "  basis: " << join(j["basis"]) << "\n";
  os << "  ideal slice dimension: " << j["ideal_slice_dim"] << "\n";
  for (const auto& p : j["ideal_slice"]) os << "    " << str(p) << "\n";
}

void print_table(const Json& j, std::ostream& os) {
  for (const auto& row : j["rows"]) {
    os << (row["passed"].get<bool>() ? "PASS " : "FAIL ") << "row " << row["row"] << " " << str(row["id"])
       << " (" << str(row["name"]) << ")\n";
    for (const auto& s : row["samples"]) {
      os << "    " << str(s["variety"]) << ": a=" << s["a"] << "/" << s["stored_a"] << " ed=" << s["ed"] << "/"
         << s["stored_ed"] << " [" << str(s["provenance"]) << "]";
      if (!s["error"].is_null()) os << " error: " << str(s["error"]);
      os << "\n";
    }
  }
  os << j["rows_checked"] << " rows, " << j["samples_checked"] << " samples, "
     << j["failed_rows"] << " failed\n";
}

void print_proof(const Json& j, std::ostream& os) {
  os << "proof " << str(j["name"]) << ": " << (j["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& s : j["steps"]) os << "  [" << str(s["status"]) << "] " << str(s["name"]) << ": " << str(s["witness"]) << "\n";
  for (const auto& [k, v] : j["results"].items()) os << "  " << k << " = " << str(v) << "\n";
}

void print_witness(const Json& j, std::ostream& os) {
  os << "unsplit bundle on " << str(j["variety"]) << " of rank " << j["rank"] << " (" << str(j["construction"]) << ")\n";
  if (!j["total"].is_null())
    os << "  " << str(j["total"]) << " -> " << str(j["variety"]) << ", " << str(j["total"]) << " -> "
       << str(j["other_projection"]) << " with fiber " << join(j["other_fiber"], " x ") << "\n";
  for (const auto& f : j["facts"])
    os << "  " << str(f["name"]) << ": " << str(f["lhs"]) << " " << str(f["relation"]) << " " << str(f["rhs"]) << "\n";
  print_verdict(j["verdict"], os, "  ");
  if (!j["note"].get<std::string>().empty()) os << "  " << str(j["note"]) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow-ring and VMRT calculator for rational homogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(fc_version()));
  bool json = false;
  std::string catalog_path;
  app.add_flag("--json", json, "Print JSON instead of text");
  app.add_option("--catalog", catalog_path, "Catalog file (default: compiled-in table)")->check(CLI::ExistingFile);

  std::string variety;
  auto* info = app.add_subcommand("info", "Dimension, VMRT, a and e.d. of a variety");
  info->add_option("variety", variety, "e.g. B4/P2, D5/Pminus5")->required();

  std::string ring_spec, contains, reduce;
  int degree = -1;
  bool export_ring = false;
  auto* ring = app.add_subcommand("ring", "Inspect a graded presentation");
  ring->add_option("ring", ring_spec, "OG510, SG26, OG27, Q4, BC<n>, P<m>, Gr<k>_<n> or a ring file")->required();
  ring->add_option("--degree", degree, "Show basis and ideal slice in this degree")->check(CLI::NonNegativeNumber);
  ring->add_option("--contains", contains, "Test ideal membership of a polynomial");
  ring->add_option("--reduce", reduce, "Normal form of a polynomial");
  ring->add_flag("--export", export_ring, "Print the presentation in exchange format");

  int samples = 3;
  auto* table = app.add_subcommand("table", "VMRT table");
  auto* verify = table->add_subcommand("verify", "Recompute every row and compare");
  verify->add_option("--samples", samples, "Parameter samples per parameterized row")->check(CLI::PositiveNumber);
  table->require_subcommand(1);

  std::string proof, proof_ring;
  auto* prove = app.add_subcommand("prove", "Replay a certificate");
  prove->add_option("proof", proof, "gd-og510 or ed-f4p4")->required();
  prove->add_option("--ring", proof_ring, "Replay on this ring file instead of the standard one")
      ->check(CLI::ExistingFile);

  std::string type_csv;
  auto* split = app.add_subcommand("split", "Splitting verdict for a uniform bundle");
  split->add_option("variety", variety)->required();
  split->add_option("--type", type_csv, "Splitting type, nonincreasing, e.g. 3,1,1,0")->required();

  std::string source, target;
  auto* morphism = app.add_subcommand("morphism", "Constancy verdict for morphisms");
  morphism->add_option("source", source)->required();
  morphism->add_option("target", target)->required();

  auto* witness = app.add_subcommand("witness", "Unsplit homogeneous bundle of rank e.d.+1");
  witness->add_option("variety", variety)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream out;
  int code = kOk;
  try {
    char* raw = nullptr;
    if (*info) {
      CatalogHandle cat(catalog_path);
      check(fc_info(cat.ptr, variety.c_str(), &raw));
      const Json j = take(raw);
      json ? void(out << j.dump(2) << "\n") : print_info(j, out);
    } else if (*ring) {
      RingHandle r(ring_spec);
      Json j;
      check(fc_ring_summary(r.ptr, &raw));
      j["summary"] = take(raw);
      if (degree >= 0) {
        check(fc_ring_degree(r.ptr, degree, &raw));
        j["degree"] = take(raw);
      }
      if (!contains.empty()) {
        int in = 0;
        check(fc_ring_contains(r.ptr, contains.c_str(), &in));
        j["contains"] = {{"polynomial", contains}, {"in_ideal", in != 0}};
      }
      if (!reduce.empty()) {
        check(fc_ring_normal_form(r.ptr, reduce.c_str(), &raw));
        j["normal_form"] = {{"polynomial", reduce}, {"normal_form", take_text(raw)}};
      }
      if (export_ring) {
        check(fc_ring_export(r.ptr, &raw));
        j["export"] = take_text(raw);
      }
      if (json) {
        out << j.dump(2) << "\n";
      } else if (export_ring && j.size() == 2) {
        out << str(j["export"]);
      } else {
        print_ring_summary(j["summary"], out);
        if (j.contains("degree")) print_ring_degree(j["degree"], out);
        if (j.contains("contains"))
          out << "  " << contains << (j["contains"]["in_ideal"].get<bool>() ? " is" : " is not") << " in the ideal\n";
        if (j.contains("normal_form")) out << "  normal form of " << reduce << ": " << str(j["normal_form"]["normal_form"]) << "\n";
        if (export_ring) out << str(j["export"]);
      }
    } else if (*table) {
      CatalogHandle cat(catalog_path);
      int passed = 0;
      check(fc_table_verify(cat.ptr, samples, &raw, &passed));
      const Json j = take(raw);
      json ? void(out << j.dump(2) << "\n") : print_table(j, out);
      if (!passed) code = kVerifyFailed;
    } else if (*prove) {
      int passed = 0;
      const std::string text = proof_ring.empty() ? std::string() : read_file(proof_ring);
      check(fc_prove(proof.c_str(), proof_ring.empty() ? nullptr : text.c_str(), &raw, &passed));
      const Json j = take(raw);
      json ? void(out << j.dump(2) << "\n") : print_proof(j, out);
      if (!passed) code = kVerifyFailed;
    } else if (*split) {
      CatalogHandle cat(catalog_path);
      check(fc_split(cat.ptr, variety.c_str(), type_csv.c_str(), &raw));
      const Json j = take(raw);
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << str(j["variety"]) << ", splitting type (" << join(j["splitting_type"]) << ")\n";
        print_verdict(j, out);
      }
    } else if (*morphism) {
      check(fc_morphism(source.c_str(), target.c_str(), &raw));
      const Json j = take(raw);
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << str(j["source"]) << " -> " << str(j["target"]) << "\n";
        print_verdict(j, out);
      }
    } else if (*witness) {
      CatalogHandle cat(catalog_path);
      check(fc_witness(cat.ptr, variety.c_str(), &raw));
      const Json j = take(raw);
      json ? void(out << j.dump(2) << "\n") : print_witness(j, out);
    }
  } catch (const Failure& f) {
    if (json) {
      std::cout << Json{{"error", fc_status_name(f.status)}, {"message", f.message}}.dump(2) << "\n";
    }
    std::cerr << "error (" << fc_status_name(f.status) << "): " << f.message << "\n";
    return kUsage;
  }
  std::cout << out.str();
  return code;
}
