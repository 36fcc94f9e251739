#include "cache.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace wk::cli {

namespace {

struct Record {
  TauSpec spec;
  Rational value;
};

bool record_order(const Record& a, const Record& b) {
  if (a.spec.genus != b.spec.genus) return a.spec.genus < b.spec.genus;
  if (a.spec.points() != b.spec.points()) return a.spec.points() < b.spec.points();
  return a.spec.exponents < b.spec.exponents;
}

std::string render(const Record& r) {
  std::string line = std::to_string(r.spec.genus) + ";";
  for (std::size_t i = 0; i < r.spec.exponents.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(r.spec.exponents[i]);
  }
  line += ';' + rational_str(r.value);
  return line;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line_no,
                       const std::string& what) {
  throw CacheError(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

void cache_save(const MemoTable& table, const std::filesystem::path& path) {
  std::vector<Record> records;
  table.for_each([&records](const TauSpec& spec, const Rational& value) {
    records.push_back({spec, value});
  });
  std::sort(records.begin(), records.end(), record_order);

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << kCacheHeader << '\n';
    for (const Record& r : records) out << render(r) << '\n';
    out.flush();
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::size_t cache_load(MemoTable& table, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot read " + path.string());

  std::string line;
  if (!std::getline(in, line)) fail(path, 1, "missing header");
  if (line != kCacheHeader) {
    fail(path, 1, "unsupported cache format '" + line + "' (expected '" +
                      std::string(kCacheHeader) + "')");
  }

  std::size_t count = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) fail(path, line_no, "empty record");
    const auto first = line.find(';');
    const auto second = line.find(';', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      fail(path, line_no, "expected 'g;d1,...;num/den'");
    }

    int genus = 0;
    try {
      std::size_t used = 0;
      genus = std::stoi(line.substr(0, first), &used);
      if (used != first) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(path, line_no, "bad genus field");
    }

    std::vector<int> exponents;
    const std::string middle = line.substr(first + 1, second - first - 1);
    if (!middle.empty()) {
      std::size_t pos = 0;
      while (pos <= middle.size()) {
        const auto comma = middle.find(',', pos);
        const std::string field =
            middle.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
          std::size_t used = 0;
          exponents.push_back(std::stoi(field, &used));
          if (used != field.size() || field.empty()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          fail(path, line_no, "bad exponent field '" + field + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }

    Rational value;
    try {
      value = parse_rational(line.substr(second + 1));
    } catch (const std::exception& e) {
      fail(path, line_no, e.what());
    }
    if (value <= 0) fail(path, line_no, "value must be positive");

    TauSpec spec{genus, exponents};
    if (genus < 0 || !std::is_sorted(exponents.begin(), exponents.end()) ||
        (!exponents.empty() && exponents.front() < 0)) {
      fail(path, line_no, "spec is not canonical");
    }
    if (!spec.dimension_valid()) {
      fail(path, line_no, "spec is unstable or dimension-invalid");
    }

    table.insert(spec, std::move(value));
    ++count;
  }
  return count;
}

}  // namespace wk::cli
