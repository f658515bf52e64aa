#include "flagcalc/flagcalc.h"

#include "chowpresentations.hpp"
#include "divisibility.hpp"
#include "errors.hpp"
#include "serialize.hpp"
#include "verdicts.hpp"
#include "vmrtcatalog.hpp"

#include <cstdlib>
#include <cstring>
#include <regex>
#include <string>

using namespace flagcalc;

struct fc_catalog {
  Catalog catalog;
};

struct fc_ring {
  RingPresentation ring;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
fc_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return FC_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return FC_ERR_PARSE;
  } catch (const NotCovered& e) {
    last_error = e.what();
    return FC_ERR_NOT_COVERED;
  } catch (const UnsupportedShape& e) {
    last_error = e.what();
    return FC_ERR_UNSUPPORTED;
  } catch (const InvalidInput& e) {
    last_error = e.what();
    return FC_ERR_INVALID;
  } catch (const RuleNotApplicable& e) {
    last_error = e.what();
    return FC_ERR_NOT_COVERED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return FC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw InvalidInput(std::string(what) + " must not be NULL");
}

const Catalog& cat_of(const fc_catalog* c) { return c ? c->catalog : Catalog::builtin(); }

void emit(const Json& j, char** out) {
  need(out, "output pointer");
  *out = dup(j.dump(2));
}

RingPresentation builtin_ring(const std::string& name) {
  std::smatch m;
  if (name == "OG510") return ring_OG510();
  if (name == "SG26") return ring_isotropic2(Isotropic2Variant::SG26);
  if (name == "OG27") return ring_isotropic2(Isotropic2Variant::OG27);
  if (name == "Q4") return ring_quadric4().ring;
  if (std::regex_match(name, m, std::regex("BC([0-9]+)"))) return borel_ring_BC(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex("P([0-9]+)"))) {
    const int d = std::stoi(m[1]);
    if (d < 1) throw InvalidInput("P<m> needs m >= 1");
    return RingPresentation::from_strings(name, {{"H", 1}}, {"H^" + std::to_string(d + 1)});
  }
  if (std::regex_match(name, m, std::regex("Gr([0-9]+)_([0-9]+)")))
    return grassmannian_ring(std::stoi(m[1]), std::stoi(m[2]));
  throw ParseError("unknown ring '" + name + "'; expected OG510, SG26, OG27, Q4, BC<n>, P<m> or Gr<k>_<n>");
}

TargetRingSpec target_of(const std::string& shape) {
  if (shape == "rank-1") return ring_rank1();
  if (shape == "quadric-4") return ring_quadric4();
  if (shape == "isotropic-2-plane") return ring_isotropic2_target(Isotropic2Variant::SG26);
  throw ParseError("unknown target shape '" + shape + "'; expected rank-1, quadric-4 or isotropic-2-plane");
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "0.1.0"; }

const char* fc_status_name(fc_status s) {
  switch (s) {
    case FC_OK: return "ok";
    case FC_ERR_INVALID: return "invalid-input";
    case FC_ERR_PARSE: return "parse-error";
    case FC_ERR_NOT_COVERED: return "not-covered";
    case FC_ERR_UNSUPPORTED: return "unsupported-shape";
    case FC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* fc_last_error(void) { return last_error.c_str(); }

void fc_string_free(char* s) { std::free(s); }

fc_status fc_catalog_builtin(fc_catalog** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = new fc_catalog{Catalog::builtin()};
  });
}

fc_status fc_catalog_load(const char* path, fc_catalog** out) {
  return guard([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new fc_catalog{Catalog::load(path)};
  });
}

void fc_catalog_free(fc_catalog* c) { delete c; }

fc_status fc_dimension(const char* variety, int* out) {
  return guard([&] {
    need(variety, "variety");
    need(out, "output pointer");
    *out = dim_quotient(MarkedDynkin::parse(variety));
  });
}

fc_status fc_info(const fc_catalog* c, const char* variety, char** json_out) {
  return guard([&] {
    need(variety, "variety");
    const MarkedDynkin m = MarkedDynkin::parse(variety);
    Json j = variety_summary(m);
    try {
      j["catalog"] = to_json(cat_of(c).entry(m));
      j["not_covered"] = nullptr;
    } catch (const NotCovered& e) {
      j["catalog"] = nullptr;
      j["not_covered"] = e.what();
    }
    emit(j, json_out);
  });
}

fc_status fc_table_verify(const fc_catalog* c, int samples, char** json_out, int* passed) {
  return guard([&] {
    if (samples < 1) throw InvalidInput("samples must be at least 1");
    const TableReport r = verify_table(cat_of(c), samples);
    if (passed) *passed = r.passed ? 1 : 0;
    Json j = to_json(r);
    j["catalog"] = cat_of(c).source();
    j["samples_per_row"] = samples;
    emit(j, json_out);
  });
}

fc_status fc_prove(const char* name, const char* ring_text, char** json_out, int* passed) {
  return guard([&] {
    need(name, "proof name");
    const std::string n = name;
    const RingPresentation ring = ring_text ? RingPresentation::parse(ring_text) : ring_OG510();
    ProofReport r;
    if (n == "gd-og510") r = verify_gd_OG510(ring);
    else if (n == "ed-f4p4") r = verify_ed_F4P4_vmrt(ring);
    else throw ParseError("unknown proof '" + n + "'; expected gd-og510 or ed-f4p4");
    if (passed) *passed = r.passed ? 1 : 0;
    Json j = to_json(r);
    j["ring"] = ring.export_text();
    emit(j, json_out);
  });
}

fc_status fc_split(const fc_catalog* c, const char* variety, const char* type_csv, char** json_out) {
  return guard([&] {
    need(variety, "variety");
    need(type_csv, "splitting type");
    const MarkedDynkin m = MarkedDynkin::parse(variety);
    const SplittingType t = SplittingType::parse(type_csv);
    Json j = to_json(splitting_verdict(m, t, cat_of(c)));
    j["variety"] = m.to_string();
    j["splitting_type"] = t.entries();
    emit(j, json_out);
  });
}

fc_status fc_morphism(const char* source, const char* target, char** json_out) {
  return guard([&] {
    need(source, "source");
    need(target, "target");
    const MarkedDynkin s = MarkedDynkin::parse(source), t = MarkedDynkin::parse(target);
    Json j = to_json(morphism_verdict(s, t));
    j["source"] = s.to_string();
    j["target"] = t.to_string();
    emit(j, json_out);
  });
}

fc_status fc_witness(const fc_catalog* c, const char* variety, char** json_out) {
  return guard([&] {
    need(variety, "variety");
    emit(to_json(optimality_witness(MarkedDynkin::parse(variety), cat_of(c))), json_out);
  });
}

fc_status fc_obstruction(const char* source, const char* shape, char** json_out) {
  return guard([&] {
    need(source, "source");
    need(shape, "shape");
    emit(to_json(quartic_obstruction(MarkedDynkin::parse(source), target_of(shape))), json_out);
  });
}

fc_status fc_ring_builtin(const char* name, fc_ring** out) {
  return guard([&] {
    need(name, "ring name");
    need(out, "output pointer");
    *out = new fc_ring{builtin_ring(name)};
  });
}

fc_status fc_ring_parse(const char* text, fc_ring** out) {
  return guard([&] {
    need(text, "ring text");
    need(out, "output pointer");
    *out = new fc_ring{RingPresentation::parse(text)};
  });
}

void fc_ring_free(fc_ring* r) { delete r; }

fc_status fc_ring_summary(const fc_ring* r, char** json_out) {
  return guard([&] {
    need(r, "ring");
    emit(ring_summary(r->ring), json_out);
  });
}

fc_status fc_ring_degree(const fc_ring* r, int degree, char** json_out) {
  return guard([&] {
    need(r, "ring");
    if (degree < 0) throw InvalidInput("degree must be nonnegative");
    emit(ring_degree(r->ring, degree), json_out);
  });
}

fc_status fc_ring_normal_form(const fc_ring* r, const char* poly, char** out) {
  return guard([&] {
    need(r, "ring");
    need(poly, "polynomial");
    need(out, "output pointer");
    *out = dup(normal_form(r->ring, std::string_view(poly)).to_string());
  });
}

fc_status fc_ring_contains(const fc_ring* r, const char* poly, int* out) {
  return guard([&] {
    need(r, "ring");
    need(poly, "polynomial");
    need(out, "output pointer");
    *out = ideal_contains(r->ring, r->ring.parse_poly(poly)) ? 1 : 0;
  });
}

fc_status fc_ring_export(const fc_ring* r, char** out) {
  return guard([&] {
    need(r, "ring");
    need(out, "output pointer");
    *out = dup(r->ring.export_text());
  });
}

}  // extern "C"
