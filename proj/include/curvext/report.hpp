#pragma once

// Structured command reports: exact JSON serialization, a plain-text
// renderer, and the small bundle expression language used on the command
// line ("2*g+5pts", "4K-3pts:aligned", "K-1*g").

#include <json.hpp>

#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "curvext/curve.hpp"
#include "curvext/types.hpp"

namespace curvext {

using Json = nlohmann::ordered_json;

inline Json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v.convert_to<long long>());
  return v.str();  // exact decimal fallback for out-of-range values
}

inline std::string rat_text(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::KindMismatch: return "kind-mismatch";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::MixedSurface: return "mixed-surface";
    case ErrorKind::Negativity: return "negativity";
    case ErrorKind::Maroni: return "maroni";
    case ErrorKind::Range: return "range";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::NoUniversal: return "no-universal";
    case ErrorKind::Homogeneity: return "homogeneity";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::Parse: return "parse";
  }
  return "error";
}

struct ReportRecord {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<std::string> rules;
  std::vector<std::string> warnings;
  // Preformatted lines (aligned tables); shown by the text renderer only.
  std::vector<std::string> human_extra;
};

inline Json to_json(const ReportRecord& r) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  j["rules"] = r.rules;
  j["warnings"] = r.warnings;
  return j;
}

namespace detail {

inline void render_value(std::ostream& os, const Json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_object() || val.is_array()) {
        os << pad << key << ":";
        if (val.empty()) {
          os << " (none)\n";
        } else {
          os << "\n";
          render_value(os, val, indent + 2);
        }
      } else {
        os << pad << key << ": "
           << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& el : v) {
      if (el.is_object() || el.is_array()) {
        os << pad << "-\n";
        render_value(os, el, indent + 2);
      } else {
        os << pad << "- "
           << (el.is_string() ? el.get<std::string>() : el.dump()) << "\n";
      }
    }
  } else {
    os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace detail

inline std::string to_human(const ReportRecord& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (r.inputs.is_object() && r.inputs.empty()) {
    os << "inputs: (none)\n";
  } else {
    os << "inputs:\n";
    detail::render_value(os, r.inputs, 2);
  }
  // A preformatted table in human_extra supersedes the raw row objects.
  Json outs = r.outputs;
  if (!r.human_extra.empty() && outs.is_object()) {
    outs.erase("rows");
    outs.erase("criteria");
  }
  if (outs.is_object() && outs.empty()) {
    os << "outputs: (see table below)\n";
  } else {
    os << "outputs:\n";
    detail::render_value(os, outs, 2);
  }
  if (r.rules.empty()) {
    os << "rules: (none)\n";
  } else {
    os << "rules:\n";
    for (const std::string& s : r.rules) os << "  - " << s << "\n";
  }
  if (r.warnings.empty()) {
    os << "warnings: (none)\n";
  } else {
    os << "warnings:\n";
    for (const std::string& s : r.warnings) os << "  - " << s << "\n";
  }
  if (!r.human_extra.empty()) {
    os << "\n";
    for (const std::string& s : r.human_extra) os << s << "\n";
  }
  return os.str();
}

// --- Bundle expression language -------------------------------------------

struct ParsedBundle {
  Int pencil_coef = 0;  // multiples of the gonality pencil "g"
  Int K_coef = 0;       // multiples of the canonical class "K"
  Int pts = 0;          // signed count of general points ("+3pts", "-2pts")
  bool aligned = false;
};

inline ParsedBundle parse_bundle(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  ParsedBundle out;
  const std::string aligned_suffix = ":aligned";
  if (s.size() >= aligned_suffix.size() &&
      s.compare(s.size() - aligned_suffix.size(), aligned_suffix.size(),
                aligned_suffix) == 0) {
    out.aligned = true;
    s.erase(s.size() - aligned_suffix.size());
  }
  if (s.empty()) throw ParseError("empty bundle expression");

  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in bundle expression");
    }
    first = false;
    Int coef = 1;
    std::size_t dstart = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos > dstart) coef = Int(s.substr(dstart, pos - dstart));
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos + 2 < s.size() + 1 && s.compare(pos, 3, "pts") == 0) {
      out.pts += sign * coef;
      pos += 3;
    } else if (pos < s.size() && s[pos] == 'K') {
      out.K_coef += sign * coef;
      pos += 1;
    } else if (pos < s.size() && s[pos] == 'g') {
      out.pencil_coef += sign * coef;
      pos += 1;
    } else {
      throw ParseError("expected 'g', 'K' or 'pts' in bundle expression");
    }
  }
  return out;
}

// Interprets a parsed bundle expression for a given curve class.
inline BundleExpr bundle_for(const CurveClass& curve, const ParsedBundle& pb) {
  switch (curve.kind) {
    case CurveKind::Hyperelliptic: {
      // K = (g-1) * pencil exactly.
      Int a = pb.pencil_coef + pb.K_coef * (curve.genus - 1);
      if (pb.pts < 0)
        throw DomainError(
            "hyperelliptic bundles add general points; use a*g+k pts");
      return BundleExpr(HypBundle{a, pb.pts});
    }
    case CurveKind::Trigonal: {
      if (pb.K_coef < 0 || pb.K_coef > 1)
        throw DomainError("trigonal bundles are c*K + n*g with c in {0,1}");
      if (pb.pts != 0)
        throw DomainError("trigonal bundles do not take point terms");
      TrigBundle tb;
      tb.c_K = pb.K_coef == 1 ? 1 : 0;
      tb.n = pb.pencil_coef;
      return BundleExpr(tb);
    }
    case CurveKind::Genus3Quartic: {
      if (pb.pencil_coef != 0)
        throw DomainError("genus-3 bundles are c*K - r*pts");
      if (pb.pts > 0)
        throw DomainError("points on the plane quartic are subtracted");
      return BundleExpr(G3Bundle{pb.K_coef, Int(-pb.pts), pb.aligned});
    }
    default:
      throw KindError("bundle expressions cover hyperelliptic, trigonal and "
                      "genus-3 curves");
  }
}

}  // namespace curvext
