#include "pexc/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "pexc/distance.hpp"

namespace pexc {

namespace {

constexpr std::string_view kHeaderPrefix = "# whitney-table ";

int parse_small(std::string_view s, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("table cache line " + std::to_string(line_no) +
                             ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

void write_table_cache(std::ostream& out, const std::vector<WhitneyTable>& tables) {
  if (tables.empty()) throw std::invalid_argument("write_table_cache: no tables");
  const Method method = tables.front().method;
  for (const auto& t : tables) {
    if (t.method != method) throw std::invalid_argument("write_table_cache: mixed methods");
  }
  out << kHeaderPrefix << "version=" << kTableCacheVersion << " method=" << to_string(method)
      << "\n";
  out << "n,k,W\n";
  for (const auto& t : tables) {
    for (std::size_t k = 0; k < t.values.size(); ++k) {
      out << t.n << ',' << k << ',' << to_string(t.values[k]) << '\n';
    }
  }
}

void write_table_cache(std::ostream& out, const WhitneyTable& table) {
  write_table_cache(out, std::vector<WhitneyTable>{table});
}

std::vector<WhitneyTable> read_table_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(kHeaderPrefix)) {
    throw std::runtime_error("table cache: missing header");
  }
  const std::string version_tag = "version=" + std::to_string(kTableCacheVersion) + " ";
  std::string_view rest = std::string_view(line).substr(kHeaderPrefix.size());
  if (!rest.starts_with(version_tag)) throw std::runtime_error("table cache: unsupported version");
  rest.remove_prefix(version_tag.size());
  if (!rest.starts_with("method=")) throw std::runtime_error("table cache: missing method");
  Method method;
  try {
    method = parse_method(rest.substr(7));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("table cache: ") + e.what());
  }

  if (!std::getline(in, line) || line != "n,k,W") {
    throw std::runtime_error("table cache: missing column header");
  }

  std::vector<WhitneyTable> tables;
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::runtime_error("table cache line " + std::to_string(line_no) + ": expected n,k,W");
    }
    const std::string_view sv(line);
    const int n = parse_small(sv.substr(0, c1), line_no);
    const int k = parse_small(sv.substr(c1 + 1, c2 - c1 - 1), line_no);
    ExactInteger w;
    try {
      w = parse_integer(sv.substr(c2 + 1));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("table cache line " + std::to_string(line_no) + ": " + e.what());
    }
    if (n < 1) throw std::runtime_error("table cache line " + std::to_string(line_no) + ": n < 1");
    if (tables.empty() || tables.back().n != n) {
      if (k != 0) {
        throw std::runtime_error("table cache line " + std::to_string(line_no) +
                                 ": row must start at k=0");
      }
      tables.push_back(WhitneyTable{n, {}, method});
    }
    auto& row = tables.back();
    if (k != static_cast<int>(row.values.size()) || k > diameter(n)) {
      throw std::runtime_error("table cache line " + std::to_string(line_no) +
                               ": unexpected k=" + std::to_string(k));
    }
    row.values.push_back(std::move(w));
  }
  for (const auto& t : tables) {
    if (static_cast<int>(t.values.size()) != diameter(t.n) + 1) {
      throw std::runtime_error("table cache: row n=" + std::to_string(t.n) + " is incomplete");
    }
  }
  return tables;
}

void save_table_cache(const std::string& path, const std::vector<WhitneyTable>& tables) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_table_cache(out, tables);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<WhitneyTable> load_table_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_table_cache(in);
}

}  // namespace pexc
