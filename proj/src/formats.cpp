#include "cgt/formats.hpp"

#include <fstream>
#include <sstream>

namespace cgt {

namespace {

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, size_t line, const std::string& why) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + why);
}

// "[[1,2],[0,1]]" with entries parsed by the field
Mat parse_matrix(const std::string& text, const Field& f, u32 dim,
                 const std::string& origin, size_t lineno) {
  std::vector<Vec> rows;
  size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip();
  if (pos >= text.size() || text[pos] != '[') fail(origin, lineno, "expected '['");
  ++pos;
  while (true) {
    skip();
    if (pos < text.size() && text[pos] == ']') { ++pos; break; }
    if (pos >= text.size() || text[pos] != '[') fail(origin, lineno, "expected row '['");
    ++pos;
    Vec row;
    std::string entry;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ']' && depth == 0) break;
      if (c == ',' && depth == 0) {
        row.push_back(f->parse(trimmed(entry)));
        entry.clear();
      } else {
        entry.push_back(c);
      }
      ++pos;
    }
    if (pos >= text.size()) fail(origin, lineno, "unterminated row");
    if (!trimmed(entry).empty()) row.push_back(f->parse(trimmed(entry)));
    ++pos;  // ']'
    if (row.size() != dim) fail(origin, lineno, "row has wrong length");
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  if (rows.size() != dim) fail(origin, lineno, "wrong number of rows");
  return Mat::from_rows(f, rows);
}

}  // namespace

ParsedGroupFile parse_group_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;

  std::optional<u32> degree;
  std::optional<u64> field_p;
  std::optional<u32> field_k;
  std::optional<u32> dim;
  std::optional<u64> declared_order;
  std::vector<std::string> gen_lines;
  std::vector<size_t> gen_linenos;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string key;
    ls >> key;
    if (key == "degree") {
      u64 n = 0;
      if (!(ls >> n) || n == 0) fail(origin, lineno, "bad degree");
      degree = static_cast<u32>(n);
    } else if (key == "field") {
      u64 p = 0, k = 0;
      if (!(ls >> p >> k)) fail(origin, lineno, "bad field line (want: field p k)");
      field_p = p;
      field_k = static_cast<u32>(k);
    } else if (key == "dim") {
      u64 n = 0;
      if (!(ls >> n) || n == 0) fail(origin, lineno, "bad dim");
      dim = static_cast<u32>(n);
    } else if (key == "order") {
      u64 n = 0;
      if (!(ls >> n) || n == 0) fail(origin, lineno, "bad order");
      declared_order = n;
    } else if (key == "gen") {
      std::string rest;
      std::getline(ls, rest);
      gen_lines.push_back(trimmed(rest));
      gen_linenos.push_back(lineno);
    } else {
      fail(origin, lineno, "unknown directive '" + key + "'");
    }
  }

  ParsedGroupFile out;
  out.declared_order = declared_order;
  if (degree && (field_p || dim)) fail(origin, lineno, "mixed permutation and matrix headers");
  if (degree) {
    std::vector<Perm> gens;
    for (size_t i = 0; i < gen_lines.size(); ++i) {
      try {
        gens.push_back(parse_perm(gen_lines[i], *degree));
      } catch (const ParseError& e) {
        fail(origin, gen_linenos[i], e.what());
      }
    }
    out.perm = PermGroup(*degree, std::move(gens));
    if (declared_order && out.perm->order() != *declared_order)
      throw ParseError(origin + ": computed order " + std::to_string(out.perm->order()) +
                       " does not match declared order " + std::to_string(*declared_order));
    return out;
  }
  if (field_p && dim) {
    Field f = FieldSpec::make(*field_p, field_k.value_or(1));
    std::vector<Mat> gens;
    for (size_t i = 0; i < gen_lines.size(); ++i) {
      Mat m = parse_matrix(gen_lines[i], f, *dim, origin, gen_linenos[i]);
      if (!m.inverse()) fail(origin, gen_linenos[i], "generator matrix is singular");
      gens.push_back(std::move(m));
    }
    out.mat = MatGroup(f, *dim, std::move(gens));
    if (declared_order && out.mat->order() != *declared_order)
      throw ParseError(origin + ": computed order " + std::to_string(out.mat->order()) +
                       " does not match declared order " + std::to_string(*declared_order));
    return out;
  }
  fail(origin, lineno, "missing 'degree N' or 'field p k' + 'dim n' headers");
}

ParsedGroupFile parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path);
}

void write_perm_group(std::ostream& out, const PermGroup& g, bool with_order) {
  out << "degree " << g.degree() << "\n";
  if (with_order) out << "order " << g.order() << "\n";
  for (const Perm& p : g.generators()) out << "gen " << p.to_cycles() << "\n";
}

std::string perm_group_to_text(const PermGroup& g, bool with_order) {
  std::ostringstream out;
  write_perm_group(out, g, with_order);
  return out.str();
}

}  // namespace cgt
