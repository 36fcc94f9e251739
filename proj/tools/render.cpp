#include "render.hpp"

#include <stdexcept>

#include <json.hpp>

namespace wk::cli {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::domain_error("unknown format '" + name + "'");
}

namespace {

json rational_json(const Rational& value) {
  return json{{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

}  // namespace

std::string render_rational(const Rational& value, Format format) {
  switch (format) {
    case Format::kJson:
      return rational_json(value).dump();
    case Format::kCsv:
      return value.get_num().get_str() + "," + value.get_den().get_str();
    case Format::kText:
    default:
      return value.get_str();
  }
}

std::string render_factorization(const PrimeFactorization& f, Format format) {
  switch (format) {
    case Format::kJson: {
      json factors = json::object();
      for (auto [p, e] : f.factors()) factors[std::to_string(p)] = e;
      return json{{"factorization", f.str()}, {"factors", factors}}.dump();
    }
    case Format::kCsv:
    case Format::kText:
    default:
      return f.str();
  }
}

std::string render_report(const VerificationReport& report, Format format) {
  if (format == Format::kJson) {
    json witnesses = json::array();
    for (const Witness& w : report.witnesses) {
      witnesses.push_back(json{{"instance", w.instance},
                               {"expected", w.expected},
                               {"actual", w.actual}});
    }
    return json{{"claim", report.claim},
                {"instances", report.instances},
                {"pass", report.pass()},
                {"witnesses", witnesses}}
        .dump();
  }

  std::string out = report.claim + ": ";
  if (report.pass()) {
    out += "pass (" + std::to_string(report.instances) + " instances checked)";
  } else {
    out += "FAIL (" + std::to_string(report.witnesses.size()) + " of " +
           std::to_string(report.instances) + " instances)";
    for (const Witness& w : report.witnesses) {
      out += "\n  " + w.instance + ": expected " + w.expected + ", got " + w.actual;
    }
  }
  return out;
}

}  // namespace wk::cli
