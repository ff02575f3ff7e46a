#pragma once

// Versioned line-oriented text documents for multipartitions, abaci, level
// one charged partitions and level-rank duals.
//
//   version 1
//   kind multipartition
//   e 3
//   charge -1 2
//   component 2 1
//   component 1 1
//
// Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abacus.hpp"
#include "core.hpp"

namespace hfock {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& field, const std::string& message)
      : std::runtime_error(format(line, field, message)), line_(line), field_(field) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(int line, const std::string& field, const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (!field.empty()) out += ", field '" + field + "'";
    return out + ": " + message;
  }

  int line_;
  std::string field_;
};

struct AbacusDocument {
  Abacus abacus;
  int e = 2;

  bool operator==(const AbacusDocument&) const = default;
};

struct LevelOneDocument {
  ChargedPartition value;
  int e = 2;
  int l = 2;

  bool operator==(const LevelOneDocument&) const = default;
};

/// A level-rank dual: e components, stored modulus ℓ.
struct DualDocument {
  ChargedMultipartition dual;

  bool operator==(const DualDocument&) const = default;
};

using Document = std::variant<ChargedMultipartition, AbacusDocument, LevelOneDocument, DualDocument>;

inline constexpr int kDocumentVersion = 1;

namespace detail {

struct Line {
  int number = 0;
  std::string key;
  std::vector<std::string> values;
};

inline int parse_int(const Line& line, const std::string& token) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, line.key, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line.number, line.key, "expected an integer, got '" + token + "'");
  return v;
}

inline std::vector<int> parse_ints(const Line& line, std::size_t from = 0) {
  std::vector<int> out;
  for (std::size_t i = from; i < line.values.size(); ++i) out.push_back(parse_int(line, line.values[i]));
  return out;
}

inline int single_int(const Line& line) {
  if (line.values.size() != 1) throw ParseError(line.number, line.key, "expected exactly one value");
  return parse_int(line, line.values[0]);
}

inline Partition parse_partition(const Line& line, std::size_t from = 0) {
  std::vector<int> parts = parse_ints(line, from);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw ParseError(line.number, line.key, "parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw ParseError(line.number, line.key, "parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

inline std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string keyed(const std::string& key, const std::vector<int>& xs) {
  return xs.empty() ? key + "\n" : key + " " + join(xs) + "\n";
}

class Fields {
 public:
  explicit Fields(std::vector<Line> lines, int last_line) : lines_(std::move(lines)), last_(last_line) {}

  const Line& one(const std::string& key) {
    const Line* found = nullptr;
    for (const auto& l : lines_) {
      if (l.key != key) continue;
      if (found) throw ParseError(l.number, key, "field given more than once");
      found = &l;
    }
    if (!found) throw ParseError(last_, key, "missing required field");
    seen_.insert({key, true});
    return *found;
  }

  std::vector<const Line*> many(const std::string& key) {
    std::vector<const Line*> out;
    for (const auto& l : lines_) {
      if (l.key == key) out.push_back(&l);
    }
    seen_.insert({key, true});
    return out;
  }

  void reject_unknown() const {
    for (const auto& l : lines_) {
      if (!seen_.contains(l.key)) throw ParseError(l.number, l.key, "unknown field");
    }
  }

  int last_line() const noexcept { return last_; }

 private:
  std::vector<Line> lines_;
  std::map<std::string, bool> seen_;
  int last_;
};

template <class F>
auto guarded(int line, const std::string& field, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, field, std::string("invariant violated: ") + e.what());
  }
}

}  // namespace detail

inline std::string emit(const ChargedMultipartition& cmp) {
  std::string out = "version 1\nkind multipartition\n";
  out += "e " + std::to_string(cmp.e) + "\n";
  out += detail::keyed("charge", cmp.charge);
  for (const auto& p : cmp.components) out += detail::keyed("component", p.parts());
  return out;
}

inline std::string emit(const AbacusDocument& d) {
  std::string out = "version 1\nkind abacus\n";
  out += "e " + std::to_string(d.e) + "\n";
  out += "runners " + std::to_string(d.abacus.runners()) + "\n";
  out += "tail " + std::to_string(d.abacus.tail()) + "\n";
  for (int j = 1; j <= d.abacus.runners(); ++j) {
    std::vector<int> row{j};
    row.insert(row.end(), d.abacus.beads(j).begin(), d.abacus.beads(j).end());
    out += detail::keyed("beads", row);
  }
  return out;
}

inline std::string emit(const LevelOneDocument& d) {
  std::string out = "version 1\nkind level1\n";
  out += "e " + std::to_string(d.e) + "\n";
  out += "l " + std::to_string(d.l) + "\n";
  out += "charge " + std::to_string(d.value.charge) + "\n";
  out += detail::keyed("partition", d.value.partition.parts());
  return out;
}

inline std::string emit(const DualDocument& d) {
  std::string out = "version 1\nkind dual\n";
  out += "e " + std::to_string(d.dual.level()) + "\n";
  out += "l " + std::to_string(d.dual.e) + "\n";
  out += detail::keyed("charge", d.dual.charge);
  for (const auto& p : d.dual.components) out += detail::keyed("component", p.parts());
  return out;
}

inline std::string emit(const Document& doc) {
  return std::visit([](const auto& d) { return emit(d); }, doc);
}

inline Document parse_document(const std::string& text) {
  std::vector<detail::Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    detail::Line line;
    line.number = number;
    if (!(words >> line.key) || line.key[0] == '#') continue;
    for (std::string w; words >> w;) line.values.push_back(w);
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError(number, "", "empty document");
  detail::Fields f(std::move(lines), number);

  const auto& version = f.one("version");
  if (detail::single_int(version) != kDocumentVersion) {
    throw ParseError(version.number, "version", "unsupported version");
  }
  const auto& kind_line = f.one("kind");
  if (kind_line.values.size() != 1) throw ParseError(kind_line.number, "kind", "expected exactly one value");
  const std::string kind = kind_line.values[0];
  const auto& e_line = f.one("e");
  const int e = detail::single_int(e_line);

  auto read_tuple = [&]() {
    const auto& charge_line = f.one("charge");
    std::vector<int> charge = detail::parse_ints(charge_line);
    std::vector<Partition> comps;
    for (const auto* line : f.many("component")) comps.push_back(detail::parse_partition(*line));
    if (comps.size() != charge.size()) {
      throw ParseError(charge_line.number, "charge", "number of charge entries differs from number of components");
    }
    return std::make_pair(std::move(comps), std::move(charge));
  };

  Document out;
  if (kind == "multipartition") {
    auto [comps, charge] = read_tuple();
    out = detail::guarded(e_line.number, "e", [&] { return ChargedMultipartition(comps, charge, e); });
  } else if (kind == "dual") {
    const auto& l_line = f.one("l");
    const int l = detail::single_int(l_line);
    auto [comps, charge] = read_tuple();
    if (static_cast<int>(comps.size()) != e) {
      throw ParseError(e_line.number, "e", "a dual document has e components");
    }
    out = detail::guarded(l_line.number, "l", [&] { return DualDocument{ChargedMultipartition(comps, charge, l)}; });
  } else if (kind == "level1") {
    const int l = detail::single_int(f.one("l"));
    const int s = detail::single_int(f.one("charge"));
    const Partition p = detail::parse_partition(f.one("partition"));
    if (e < 2 || l < 2) throw ParseError(e_line.number, "e", "e and l must be at least 2");
    out = LevelOneDocument{{p, s}, e, l};
  } else if (kind == "abacus") {
    if (e < 2) throw ParseError(e_line.number, "e", "e must be at least 2");
    const auto& runners_line = f.one("runners");
    const int runners = detail::single_int(runners_line);
    const int tail = detail::single_int(f.one("tail"));
    if (runners < 1) throw ParseError(runners_line.number, "runners", "must be positive");
    std::vector<std::vector<int>> beads(static_cast<std::size_t>(runners));
    std::vector<bool> given(static_cast<std::size_t>(runners), false);
    for (const auto* line : f.many("beads")) {
      if (line->values.empty()) throw ParseError(line->number, "beads", "missing runner index");
      const int j = detail::parse_int(*line, line->values[0]);
      if (j < 1 || j > runners) throw ParseError(line->number, "beads", "runner index out of range");
      if (given[static_cast<std::size_t>(j - 1)]) throw ParseError(line->number, "beads", "runner listed twice");
      given[static_cast<std::size_t>(j - 1)] = true;
      beads[static_cast<std::size_t>(j - 1)] = detail::parse_ints(*line, 1);
    }
    for (int j = 1; j <= runners; ++j) {
      if (!given[static_cast<std::size_t>(j - 1)]) {
        throw ParseError(f.last_line(), "beads", "runner " + std::to_string(j) + " missing");
      }
    }
    out = detail::guarded(runners_line.number, "beads",
                          [&] { return AbacusDocument{Abacus(std::move(beads), tail), e}; });
  } else {
    throw ParseError(kind_line.number, "kind", "unknown kind '" + kind + "'");
  }
  f.reject_unknown();
  return out;
}

/// The multipartition a document stands for.
inline ChargedMultipartition as_multipartition(const Document& doc) {
  struct Visitor {
    ChargedMultipartition operator()(const ChargedMultipartition& c) const { return c; }
    ChargedMultipartition operator()(const AbacusDocument& d) const { return from_abacus(d.abacus, d.e); }
    ChargedMultipartition operator()(const LevelOneDocument& d) const { return from_level_one(d.value, d.e, d.l); }
    ChargedMultipartition operator()(const DualDocument& d) const { return level_rank_dual_inverse(d.dual); }
  };
  return std::visit(Visitor{}, doc);
}

enum class DocumentKind { Multipartition, Abacus, LevelOne, Dual };

inline std::optional<DocumentKind> document_kind_from_string(const std::string& s) {
  if (s == "multipartition") return DocumentKind::Multipartition;
  if (s == "abacus") return DocumentKind::Abacus;
  if (s == "level1") return DocumentKind::LevelOne;
  if (s == "dual") return DocumentKind::Dual;
  return std::nullopt;
}

inline Document convert(const Document& doc, DocumentKind target) {
  const ChargedMultipartition cmp = as_multipartition(doc);
  switch (target) {
    case DocumentKind::Multipartition:
      return cmp;
    case DocumentKind::Abacus:
      return AbacusDocument{to_abacus(cmp), cmp.e};
    case DocumentKind::LevelOne:
      return LevelOneDocument{to_level_one(cmp), cmp.e, cmp.level()};
    case DocumentKind::Dual:
      return DualDocument{level_rank_dual(cmp)};
  }
  throw std::logic_error("unhandled document kind");
}

}  // namespace hfock
