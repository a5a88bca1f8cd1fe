#include "toric/dataset.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool is_blank(std::string_view line) { return split_words(line).empty(); }

bool is_comment(std::string_view line) {
  const auto words = split_words(line);
  return !words.empty() && words.front().front() == '#';
}

std::int64_t parse_int(std::string_view w, std::size_t line) {
  std::int64_t v = 0;
  const char* first = w.data();
  if (!w.empty() && w.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(w) + "'");
  }
  return v;
}

struct Block {
  std::size_t first_line = 0;
  std::vector<std::pair<std::size_t, std::string_view>> lines;
};

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks;
  Block cur;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    ++lineno;
    if (is_blank(line)) {
      if (!cur.lines.empty()) blocks.push_back(std::move(cur));
      cur = Block{};
    } else if (!is_comment(line)) {
      if (cur.lines.empty()) cur.first_line = lineno;
      cur.lines.emplace_back(lineno, line);
    }
    pos = nl + 1;
  }
  if (!cur.lines.empty()) blocks.push_back(std::move(cur));
  return blocks;
}

// Header "id <token> [dim <d>]"; returns the id, sets dim (0 = infer).
std::string parse_header(std::string_view line, std::size_t lineno, std::size_t& dim) {
  const auto words = split_words(line);
  if (words.size() < 2 || words[0] != "id") throw ParseError(lineno, "record must start with 'id <token>'");
  dim = 0;
  if (words.size() == 4 && words[2] == "dim") {
    const auto d = parse_int(words[3], lineno);
    if (d != 2 && d != 3) throw ParseError(lineno, "dim must be 2 or 3");
    dim = static_cast<std::size_t>(d);
  } else if (words.size() != 2) {
    throw ParseError(lineno, "unexpected text after the id");
  }
  return std::string(words[1]);
}

DatasetRecord parse_block(const Block& block) {
  DatasetRecord rec;
  std::size_t declared = 0;
  rec.id = parse_header(block.lines.front().second, block.lines.front().first, declared);
  std::set<LatticeVector> seen;
  for (std::size_t k = 1; k < block.lines.size(); ++k) {
    const auto [lineno, line] = block.lines[k];
    std::vector<std::int64_t> coords;
    for (auto w : split_words(line)) coords.push_back(parse_int(w, lineno));
    LatticeVector v(std::move(coords));
    if (rec.dim == 0) rec.dim = declared ? declared : v.dim();
    if (rec.dim != 2 && rec.dim != 3) throw ParseError(lineno, "generators must have 2 or 3 coordinates");
    if (v.dim() != rec.dim) {
      throw ParseError(lineno, "generator has " + std::to_string(v.dim()) + " coordinates, expected " +
                                   std::to_string(rec.dim));
    }
    if (!v.is_primitive()) throw ParseError(lineno, "generator " + v.to_string() + " is not primitive");
    if (!seen.insert(v).second) throw ParseError(lineno, "repeated generator " + v.to_string());
    rec.generators.push_back(std::move(v));
  }
  if (rec.dim == 0) rec.dim = declared;
  if (rec.generators.size() < rec.dim + 1 || rec.generators.empty()) {
    throw ParseError(block.first_line, "record '" + rec.id + "' needs at least dim+1 generators");
  }
  return rec;
}

}  // namespace

std::vector<DatasetRecord> parse_dataset(std::string_view text) {
  std::vector<DatasetRecord> out;
  std::set<std::string> ids;
  for (const auto& block : split_blocks(text)) {
    auto rec = parse_block(block);
    if (!ids.insert(rec.id).second) throw ParseError(block.first_line, "duplicate id '" + rec.id + "'");
    out.push_back(std::move(rec));
  }
  return out;
}

ParsedDataset parse_dataset_lenient(std::string_view text) {
  ParsedDataset out;
  std::set<std::string> ids;
  for (const auto& block : split_blocks(text)) {
    std::string id;
    try {
      std::size_t dim = 0;
      id = parse_header(block.lines.front().second, block.lines.front().first, dim);
      auto rec = parse_block(block);
      if (!ids.insert(rec.id).second) throw ParseError(block.first_line, "duplicate id '" + rec.id + "'");
      out.records.push_back(std::move(rec));
    } catch (const ParseError& e) {
      out.errors.push_back({e.line(), id, e.detail()});
    }
  }
  return out;
}

std::string format_dataset(std::span<const DatasetRecord> records) {
  std::ostringstream os;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (r) os << '\n';
    os << "id " << records[r].id << " dim " << records[r].dim << '\n';
    for (const auto& g : records[r].generators) {
      for (std::size_t k = 0; k < g.dim(); ++k) os << (k ? " " : "") << g[k];
      os << '\n';
    }
  }
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("TORIC_DATA_DIR"); env && *env) return env;
  return TORIC_DATA_DIR;
}

}  // namespace toric
