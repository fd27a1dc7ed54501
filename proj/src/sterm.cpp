#include "sforest/sterm.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "sforest/error.hpp"

namespace sforest {

STerm STerm::var(VarName name) { return STerm(Kind::Var, std::move(name), {}); }

STerm STerm::sum(std::vector<STerm> args) {
  if (args.empty()) throw Error(ErrorKind::InvalidInput, "sum of no terms");
  std::vector<STerm> flat;
  flat.reserve(args.size());
  for (STerm& a : args) {
    if (a.is_sum()) {
      for (STerm& inner : a.args_) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(a));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  std::sort(flat.begin(), flat.end());
  return STerm(Kind::Sum, std::nullopt, std::move(flat));
}

STerm STerm::product(std::vector<STerm> args) {
  if (args.empty()) throw Error(ErrorKind::InvalidInput, "product of no terms");
  std::vector<STerm> flat;
  flat.reserve(args.size());
  for (STerm& a : args) {
    if (a.is_product()) {
      for (STerm& inner : a.args_) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(a));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  return STerm(Kind::Prod, std::nullopt, std::move(flat));
}

std::strong_ordering operator<=>(const STerm& a, const STerm& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.is_var()) return a.name() <=> b.name();
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                b.args_.end());
}

bool operator==(const STerm& a, const STerm& b) { return (a <=> b) == 0; }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  STerm parse() {
    STerm t = term();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  STerm term() {
    std::vector<STerm> parts{prod()};
    while (accept('+')) parts.push_back(prod());
    return STerm::sum(std::move(parts));
  }

  STerm prod() {
    std::vector<STerm> parts{atom()};
    while (accept('*')) parts.push_back(atom());
    return STerm::product(std::move(parts));
  }

  STerm atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      STerm inner = term();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail(std::string("unexpected '") + text_[pos_] + "'");
    std::string_view word = text_.substr(start, pos_ - start);
    if (!is_valid_var_name(word)) {
      pos_ = start;
      fail("invalid variable name '" + std::string(word) + "'");
    }
    return STerm::var(VarName(std::string(word)));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const STerm& t, std::string& out) {
  switch (t.kind()) {
    case STerm::Kind::Var:
      out += t.name().str();
      return;
    case STerm::Kind::Sum:
      for (std::size_t k = 0; k < t.args().size(); ++k) {
        if (k) out += '+';
        render_into(t.args()[k], out);
      }
      return;
    case STerm::Kind::Prod:
      for (std::size_t k = 0; k < t.args().size(); ++k) {
        if (k) out += '*';
        const STerm& a = t.args()[k];
        if (a.is_sum()) out += '(';
        render_into(a, out);
        if (a.is_sum()) out += ')';
      }
      return;
  }
}

void collect(const STerm& t, std::vector<VarName>& out) {
  if (t.is_var()) {
    out.push_back(t.name());
    return;
  }
  for (const STerm& a : t.args()) collect(a, out);
}

std::vector<VarName> occurrences(const STerm& t) {
  std::vector<VarName> out;
  collect(t, out);
  return out;
}

bool in_forest_set(const STerm& t) {
  switch (t.kind()) {
    case STerm::Kind::Var:
      return true;
    case STerm::Kind::Sum:
      return std::all_of(t.args().begin(), t.args().end(), in_forest_set);
    case STerm::Kind::Prod: {
      // a flattened product regroups as x1 * (x2 * (... * last))
      auto args = t.args();
      return std::all_of(args.begin(), args.end() - 1, [](const STerm& a) { return a.is_var(); }) &&
             in_forest_set(args.back());
    }
  }
  return false;
}

Relation kappa_unchecked(const STerm& t) {
  switch (t.kind()) {
    case STerm::Kind::Var:
      return Relation::discrete({t.name()});
    case STerm::Kind::Sum: {
      Relation acc = kappa_unchecked(t.args()[0]);
      for (std::size_t k = 1; k < t.args().size(); ++k) {
        acc = disjoint_union(acc, kappa_unchecked(t.args()[k]));
      }
      return acc;
    }
    case STerm::Kind::Prod: {
      Relation acc = kappa_unchecked(t.args()[0]);
      for (std::size_t k = 1; k < t.args().size(); ++k) {
        acc = concatenation(acc, kappa_unchecked(t.args()[k]));
      }
      return acc;
    }
  }
  return {};
}

STerm term_of(const Relation& r) {
  if (r.size() == 1) return STerm::var(r.domain().front());
  std::vector<Relation> parts = connected_components(r);
  if (parts.size() > 1) {
    std::vector<STerm> args;
    args.reserve(parts.size());
    for (const Relation& p : parts) args.push_back(term_of(p));
    return STerm::sum(std::move(args));
  }
  auto split = prime_concat_split(r);
  return STerm::product({term_of(split->first), term_of(split->second)});
}

}  // namespace

STerm parse_sterm(std::string_view text) { return Parser(text).parse(); }

std::string render_sterm(const STerm& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::vector<VarName> variables(const STerm& t) {
  std::vector<VarName> out = occurrences(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_diversified(const STerm& t) {
  std::vector<VarName> occ = occurrences(t);
  std::sort(occ.begin(), occ.end());
  return std::adjacent_find(occ.begin(), occ.end()) == occ.end();
}

bool is_s_forest(const STerm& t) { return is_diversified(t) && in_forest_set(t); }

bool is_s_tree(const STerm& t) { return !t.is_sum() && is_s_forest(t); }

Relation kappa(const STerm& t) {
  if (!is_diversified(t)) {
    throw Error(ErrorKind::NotDiversified, render_sterm(t) + " repeats a variable");
  }
  return kappa_unchecked(t);
}

STerm sterm_of_ftp(const Relation& r) {
  if (!is_ftp(r)) throw Error(ErrorKind::NotFTP, "relation is not a trifunctional partial order");
  return term_of(r);
}

}  // namespace sforest
