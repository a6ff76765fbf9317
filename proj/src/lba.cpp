#include "leibniz/lba.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace leibniz {

bool operator==(const RightModule& a, const RightModule& b) {
  return a.name == b.name && a.base == b.base && a.basis == b.basis && a.action == b.action;
}

bool operator==(const Cochain2& a, const Cochain2& b) {
  return a.name == b.name && a.base == b.base && a.values == b.values;
}

bool operator==(const LbaDocument& a, const LbaDocument& b) { return a.sections == b.sections; }

const Algebra* LbaDocument::find_algebra(const std::string& name) const {
  for (const auto& s : sections)
    if (auto* a = std::get_if<Algebra>(&s))
      if (a->name == name) return a;
  return nullptr;
}
const RightModule* LbaDocument::find_module(const std::string& name) const {
  for (const auto& s : sections)
    if (auto* m = std::get_if<RightModule>(&s))
      if (m->name == name) return m;
  return nullptr;
}
const Cochain2* LbaDocument::find_cochain(const std::string& name) const {
  for (const auto& s : sections)
    if (auto* c = std::get_if<Cochain2>(&s))
      if (c->name == name) return c;
  return nullptr;
}
const NamedMatrix* LbaDocument::find_matrix(const std::string& name) const {
  for (const auto& s : sections)
    if (auto* m = std::get_if<NamedMatrix>(&s))
      if (m->name == name) return m;
  return nullptr;
}
const Algebra* LbaDocument::first_algebra() const {
  for (const auto& s : sections)
    if (auto* a = std::get_if<Algebra>(&s)) return a;
  return nullptr;
}
const RightModule* LbaDocument::first_module() const {
  for (const auto& s : sections)
    if (auto* m = std::get_if<RightModule>(&s)) return m;
  return nullptr;
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

struct LineReader {
  std::vector<std::string> lines;
  std::size_t next = 0;

  explicit LineReader(std::string_view text) {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  // Returns the next meaningful line (comments stripped), or nullopt at EOF.
  std::optional<std::pair<std::size_t, std::string>> take() {
    while (next < lines.size()) {
      std::string line = lines[next];
      ++next;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) {
          blank = false;
          break;
        }
      if (!blank) return std::make_pair(next, line);  // 1-based line number
    }
    return std::nullopt;
  }
};

struct TermList {
  std::vector<std::pair<Scalar, std::string>> terms;
};

// RHS grammar: term (' + ' term)*, term := label | scalar '*' label.
TermList parse_terms(const std::string& rhs, std::size_t lineno) {
  TermList out;
  auto tokens = split_ws(rhs);
  if (tokens.empty()) throw ParseError("empty right-hand side", lineno, 0);
  bool expect_term = true;
  for (const auto& tok : tokens) {
    if (!expect_term) {
      if (tok != "+") throw ParseError("expected '+' between terms, got '" + tok + "'", lineno, 0);
      expect_term = true;
      continue;
    }
    auto star = tok.rfind('*');
    if (star == std::string::npos) {
      if (!valid_label(tok)) throw ParseError("invalid term '" + tok + "'", lineno, 0);
      out.terms.push_back({Scalar(1), tok});
    } else {
      std::string scalar_text = tok.substr(0, star);
      std::string label = tok.substr(star + 1);
      if (!valid_label(label)) throw ParseError("invalid basis label '" + label + "'", lineno, 0);
      try {
        out.terms.push_back({GaussianRational::parse(scalar_text), label});
      } catch (const ParseError& e) {
        throw ParseError("bad scalar '" + scalar_text + "': " + e.what(), lineno, e.column());
      }
    }
    expect_term = false;
  }
  if (expect_term) throw ParseError("dangling '+' in term list", lineno, 0);
  return out;
}

// LHS "[a,b]" / "(a,b)" / "f(a,b)" with given delimiters already stripped of spaces.
std::pair<std::string, std::string> parse_lhs_pair(const std::string& lhs, char open, char close,
                                                   std::size_t lineno, const char* what) {
  if (lhs.size() < 4 || lhs.front() != open || lhs.back() != close)
    throw ParseError(std::string("malformed ") + what + " left-hand side '" + lhs + "'", lineno, 0);
  auto comma = lhs.find(',');
  if (comma == std::string::npos)
    throw ParseError(std::string("missing ',' in ") + what + " left-hand side", lineno, 0);
  std::string a = lhs.substr(1, comma - 1);
  std::string b = lhs.substr(comma + 1, lhs.size() - comma - 2);
  if (!valid_label(a) || !valid_label(b))
    throw ParseError(std::string("invalid label in ") + what + " left-hand side '" + lhs + "'",
                     lineno, 0);
  return {a, b};
}

struct BlockBody {
  std::optional<Index> dim;
  std::vector<std::string> basis;
  bool basis_seen = false;
  std::vector<std::tuple<std::size_t, std::string, std::string>> lines;  // lineno, lhs, rhs
};

Index resolve_label(const std::vector<std::string>& labels, const std::string& l,
                    std::size_t lineno) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<Index>(i);
  throw ParseError("unknown basis label '" + l + "'", lineno, 0);
}

}  // namespace

LbaDocument lba_parse(std::string_view text) {
  LbaDocument doc;
  LineReader reader(text);
  std::set<std::string> names;

  auto require_unique = [&](const std::string& name, std::size_t lineno) {
    if (names.count(name)) throw ParseError("duplicate section name '" + name + "'", lineno, 0);
    names.insert(name);
  };

  while (auto first = reader.take()) {
    auto [lineno, line] = *first;
    auto head = split_ws(line);
    const std::string& kind = head[0];

    if (kind == "algebra" || kind == "module" || kind == "cochain") {
      std::string name, base;
      if (kind == "algebra") {
        if (head.size() != 2) throw ParseError("expected 'algebra <name>'", lineno, 0);
        name = head[1];
      } else {
        if (head.size() != 4 || head[2] != "over")
          throw ParseError("expected '" + kind + " <name> over <algebra>'", lineno, 0);
        name = head[1];
        base = head[3];
      }
      require_unique(name, lineno);

      const Algebra* base_alg = nullptr;
      if (kind != "algebra") {
        base_alg = doc.find_algebra(base);
        if (!base_alg)
          throw ParseError("unresolved base algebra '" + base + "'", lineno, 0);
      }

      BlockBody body;
      bool ended = false;
      while (auto got = reader.take()) {
        auto [ln, bl] = *got;
        auto toks = split_ws(bl);
        if (toks[0] == "end") {
          ended = true;
          break;
        }
        if (toks[0] == "dim") {
          if (body.dim) throw ParseError("duplicate dim line", ln, 0);
          if (toks.size() != 2) throw ParseError("expected 'dim <n>'", ln, 0);
          try {
            long d = std::stol(toks[1]);
            if (d < 0) throw std::invalid_argument("negative");
            body.dim = static_cast<Index>(d);
          } catch (const std::exception&) {
            throw ParseError("invalid dimension '" + toks[1] + "'", ln, 0);
          }
        } else if (toks[0] == "basis") {
          if (body.basis_seen) throw ParseError("duplicate basis line", ln, 0);
          body.basis_seen = true;
          body.basis.assign(toks.begin() + 1, toks.end());
          for (const auto& l : body.basis)
            if (!valid_label(l)) throw ParseError("invalid basis label '" + l + "'", ln, 0);
          std::set<std::string> uniq(body.basis.begin(), body.basis.end());
          if (uniq.size() != body.basis.size())
            throw ParseError("repeated basis label", ln, 0);
        } else {
          auto eq = bl.find('=');
          if (eq == std::string::npos) throw ParseError("expected '=' in product line", ln, 0);
          body.lines.push_back({ln, strip_spaces(bl.substr(0, eq)), bl.substr(eq + 1)});
        }
      }
      if (!ended) throw ParseError("missing 'end' for block '" + name + "'", lineno, 0);

      if (kind == "cochain") {
        if (body.dim || body.basis_seen)
          throw ParseError("cochain blocks take dim/basis from their base algebra", lineno, 0);
        Cochain2 f(name, *base_alg);
        std::set<std::pair<Index, Index>> seen;
        for (auto& [ln, lhs, rhs] : body.lines) {
          if (lhs.rfind("f(", 0) != 0)
            throw ParseError("cochain lines look like 'f(a,b) = ...'", ln, 0);
          auto [la, lb] = parse_lhs_pair(lhs.substr(1), '(', ')', ln, "cochain");
          Index i = resolve_label(base_alg->basis, la, ln);
          Index j = resolve_label(base_alg->basis, lb, ln);
          if (!seen.insert({i, j}).second)
            throw ParseError("duplicate definition of f(" + la + "," + lb + ")", ln, 0);
          for (auto& [coeff, label] : parse_terms(rhs, ln).terms)
            f.values.at(i, j, resolve_label(base_alg->basis, label, ln)) += coeff;
        }
        doc.sections.push_back(std::move(f));
        continue;
      }

      if (!body.dim) throw ParseError("block '" + name + "' has no dim line", lineno, 0);
      if (!body.basis_seen) throw ParseError("block '" + name + "' has no basis line", lineno, 0);
      if (static_cast<Index>(body.basis.size()) != *body.dim)
        throw ParseError("basis count does not match dim", lineno, 0);

      if (kind == "algebra") {
        Algebra a(name, body.basis);
        std::set<std::pair<Index, Index>> seen;
        for (auto& [ln, lhs, rhs] : body.lines) {
          auto [la, lb] = parse_lhs_pair(lhs, '[', ']', ln, "product");
          Index i = resolve_label(a.basis, la, ln);
          Index j = resolve_label(a.basis, lb, ln);
          if (!seen.insert({i, j}).second)
            throw ParseError("duplicate definition of [" + la + "," + lb + "]", ln, 0);
          for (auto& [coeff, label] : parse_terms(rhs, ln).terms)
            a.structure.at(i, j, resolve_label(a.basis, label, ln)) += coeff;
        }
        a.derive_field_tag();
        doc.sections.push_back(std::move(a));
      } else {
        RightModule m(name, *base_alg, body.basis);
        std::set<std::pair<Index, Index>> seen;
        for (auto& [ln, lhs, rhs] : body.lines) {
          auto [la, lb] = parse_lhs_pair(lhs, '(', ')', ln, "action");
          Index p = resolve_label(m.basis, la, ln);
          Index j = resolve_label(base_alg->basis, lb, ln);
          if (!seen.insert({p, j}).second)
            throw ParseError("duplicate definition of (" + la + "," + lb + ")", ln, 0);
          for (auto& [coeff, label] : parse_terms(rhs, ln).terms)
            m.action.at(p, j, resolve_label(m.basis, label, ln)) += coeff;
        }
        doc.sections.push_back(std::move(m));
      }
    } else if (kind == "matrix") {
      if (head.size() != 6 || head[2] != "rows" || head[4] != "cols")
        throw ParseError("expected 'matrix <name> rows <r> cols <c>'", lineno, 0);
      require_unique(head[1], lineno);
      Index r, c;
      try {
        r = static_cast<Index>(std::stol(head[3]));
        c = static_cast<Index>(std::stol(head[5]));
        if (r < 0 || c < 0) throw std::invalid_argument("negative");
      } catch (const std::exception&) {
        throw ParseError("invalid matrix shape", lineno, 0);
      }
      NamedMatrix nm{head[1], Mat::Constant(r, c, Scalar(0))};
      Index filled = 0;
      bool ended = false;
      while (auto got = reader.take()) {
        auto [ln, bl] = *got;
        auto toks = split_ws(bl);
        if (toks[0] == "end") {
          ended = true;
          break;
        }
        if (toks[0] != "row") throw ParseError("expected 'row <scalars>' or 'end'", ln, 0);
        if (filled >= r) throw ParseError("too many matrix rows", ln, 0);
        if (static_cast<Index>(toks.size()) != c + 1)
          throw ParseError("expected " + std::to_string(c) + " entries in matrix row", ln, 0);
        for (Index k = 0; k < c; ++k) {
          try {
            nm.matrix(filled, k) = GaussianRational::parse(toks[k + 1]);
          } catch (const ParseError& e) {
            throw ParseError("bad scalar '" + toks[k + 1] + "': " + e.what(), ln, e.column());
          }
        }
        ++filled;
      }
      if (!ended) throw ParseError("missing 'end' for matrix '" + head[1] + "'", lineno, 0);
      if (filled != r) throw ParseError("matrix '" + head[1] + "' has missing rows", lineno, 0);
      doc.sections.push_back(std::move(nm));
    } else {
      throw ParseError("unknown block header '" + kind + "'", lineno, 0);
    }
  }
  return doc;
}

namespace {

std::string format_terms(const std::vector<std::string>& labels, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (Index k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    if (!first) os << " + ";
    first = false;
    if (v[k].is_one())
      os << labels[k];
    else
      os << v[k].str() << "*" << labels[k];
  }
  return os.str();
}

void emit_algebra(std::ostringstream& os, const Algebra& a) {
  os << "algebra " << a.name << "\n";
  os << "dim " << a.dim() << "\n";
  os << "basis";
  for (const auto& l : a.basis) os << " " << l;
  os << "\n";
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      if (a.structure.slot_is_zero(i, j)) continue;
      os << "[" << a.basis[i] << "," << a.basis[j]
         << "] = " << format_terms(a.basis, a.structure.slot(i, j)) << "\n";
    }
  os << "end\n";
}

void emit_module(std::ostringstream& os, const RightModule& m) {
  os << "module " << m.name << " over " << m.base.name << "\n";
  os << "dim " << m.mdim() << "\n";
  os << "basis";
  for (const auto& l : m.basis) os << " " << l;
  os << "\n";
  for (Index p = 0; p < m.mdim(); ++p)
    for (Index j = 0; j < m.base.dim(); ++j) {
      if (m.action.slot_is_zero(p, j)) continue;
      os << "(" << m.basis[p] << "," << m.base.basis[j]
         << ") = " << format_terms(m.basis, m.action.slot(p, j)) << "\n";
    }
  os << "end\n";
}

void emit_cochain(std::ostringstream& os, const std::vector<std::string>& labels,
                  const Cochain2& f) {
  os << "cochain " << f.name << " over " << f.base << "\n";
  for (Index i = 0; i < f.dim(); ++i)
    for (Index j = 0; j < f.dim(); ++j) {
      if (f.values.slot_is_zero(i, j)) continue;
      os << "f(" << labels[i] << "," << labels[j]
         << ") = " << format_terms(labels, f.values.slot(i, j)) << "\n";
    }
  os << "end\n";
}

void emit_matrix(std::ostringstream& os, const NamedMatrix& m) {
  os << "matrix " << m.name << " rows " << m.matrix.rows() << " cols " << m.matrix.cols() << "\n";
  for (Index r = 0; r < m.matrix.rows(); ++r) {
    os << "row";
    for (Index c = 0; c < m.matrix.cols(); ++c) os << " " << m.matrix(r, c).str();
    os << "\n";
  }
  os << "end\n";
}

}  // namespace

std::string lba_format(const LbaDocument& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : doc.sections) {
    if (!first) os << "\n";
    first = false;
    if (auto* a = std::get_if<Algebra>(&s)) {
      emit_algebra(os, *a);
    } else if (auto* m = std::get_if<RightModule>(&s)) {
      emit_module(os, *m);
    } else if (auto* f = std::get_if<Cochain2>(&s)) {
      const Algebra* base = doc.find_algebra(f->base);
      if (!base) throw Error("lba_format: cochain '" + f->name + "' has unresolved base");
      emit_cochain(os, base->basis, *f);
    } else if (auto* nm = std::get_if<NamedMatrix>(&s)) {
      emit_matrix(os, *nm);
    }
  }
  return os.str();
}

std::string lba_format(const Algebra& a) {
  std::ostringstream os;
  emit_algebra(os, a);
  return os.str();
}

std::string lba_format(const RightModule& m) {
  std::ostringstream os;
  emit_algebra(os, m.base);
  os << "\n";
  emit_module(os, m);
  return os.str();
}

std::string lba_format(const Algebra& base, const Cochain2& f) {
  std::ostringstream os;
  emit_cochain(os, base.basis, f);
  return os.str();
}

std::string lba_format(const NamedMatrix& m) {
  std::ostringstream os;
  emit_matrix(os, m);
  return os.str();
}

}  // namespace leibniz
