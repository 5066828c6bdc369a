#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "invk/aseq.hpp"
#include "invk/core.hpp"
#include "invk/gamma.hpp"
#include "invk/groth.hpp"
#include "invk/report.hpp"
#include "invk/ringcat.hpp"

// Document layer: named fixtures loaded from JSON and deterministic dumps
// of results.  Loading resolves references and checks shapes; the law
// suites stay with the check commands.
namespace invk::jio {

inline constexpr int kSchemaVersion = 1;

struct Workspace {
  int truncation = 4;
  int bound_length = 2;
  int bound_entry = 2;
  std::map<std::string, gamma::GammaPtr> gammas;
  std::map<std::string, gamma::Multimorphism> multis;
  std::map<std::string, gamma::Modification> modifications;
  std::map<std::string, ringcat::GammaMonoid> monoids;

  const gamma::GammaPtr& gamma_at(const std::string& name) const;
  const gamma::Multimorphism& multi_at(const std::string& name) const;
  const gamma::Modification& modification_at(const std::string& name) const;
  const ringcat::GammaMonoid& monoid_at(const std::string& name) const;
};

Workspace parse_workspace(const nlohmann::json& doc);
Workspace load_workspace(const std::string& path);

// Named builtin fixtures usable in place of explicit documents.
gamma::GammaPtr builtin_gamma(const std::string& name, int truncation);
ringcat::GammaMonoid builtin_monoid(const std::string& name, int truncation);

nlohmann::json category_json(const cat::FiniteCategory& c, int basepoint,
                             bool full);

nlohmann::json amorphism_json(const aseq::SeqMap& f);
aseq::SeqMap parse_amorphism(const nlohmann::json& doc);

nlohmann::json pobject_json(const gamma::GammaCategory& x,
                            const groth::Object& o);
groth::Object parse_pobject(const gamma::GammaCategory& x,
                            const nlohmann::json& doc);

nlohmann::json pmorphism_json(const gamma::GammaCategory& x,
                              const groth::Morphism& m);
groth::Morphism parse_pmorphism(const gamma::GammaCategory& x,
                                const nlohmann::json& doc);

// `bound` is echoed back verbatim; pass a null json to omit it.
nlohmann::json report_json(const Report& r, const nlohmann::json& bound);
nlohmann::json ring_report_json(const ringcat::RingReport& r,
                                const nlohmann::json& bound);

// Canonical dump: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace invk::jio
