//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/chem/smiles.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "synthroute/error.h"

namespace synthroute::chem {
namespace {

constexpr std::array<std::string_view, 118> kElements = {
  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
  "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
  "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
  "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
  "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
  "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
  "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
  "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
  "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
  "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
};

bool is_element(std::string_view sym) {
  return std::find(kElements.begin(), kElements.end(), sym) != kElements.end();
}

// Elements allowed without brackets.
bool is_organic(std::string_view sym) {
  static constexpr std::array<std::string_view, 10> kOrganic = {
    "B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I",
  };
  return std::find(kOrganic.begin(), kOrganic.end(), sym) != kOrganic.end();
}

bool is_aromatic_organic(std::string_view sym) {
  return sym == "B" || sym == "C" || sym == "N" || sym == "O" || sym == "P"
         || sym == "S";
}

bool is_aromatic_bracket(std::string_view sym) {
  return is_aromatic_organic(sym) || sym == "Se" || sym == "As"
         || sym == "Te" || sym == "Si";
}

std::string capitalize(std::string_view lower) {
  std::string s(lower);
  if (!s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char &c: out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

BondOrder default_order(const Atom &a, const Atom &b) {
  return a.aromatic && b.aromatic ? BondOrder::kAromatic : BondOrder::kSingle;
}

}  // namespace

class SmilesParser {
public:
  explicit SmilesParser(std::string_view text): text_(text) { }

  Molecule parse() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '[') {
        add_atom(bracket_atom());
      } else if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
        add_atom(organic_atom());
      } else if (c == '(') {
        if (prev_ < 0 || pending_) {
          fail(ErrorCode::kInvalidSmiles, "branch must follow an atom");
        }
        branches_.push_back(prev_);
        ++pos_;
      } else if (c == ')') {
        if (branches_.empty()) {
          fail(ErrorCode::kUnbalancedParen, "unmatched ')'");
        }
        if (pending_) {
          fail(ErrorCode::kInvalidSmiles, "bond before ')'");
        }
        prev_ = branches_.back();
        branches_.pop_back();
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/'
                 || c == '\\') {
        if (prev_ < 0 || pending_) {
          fail(ErrorCode::kInvalidSmiles, "bond symbol must follow an atom");
        }
        pending_ = bond_symbol(c);
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        ring_closure(c - '0');
        ++pos_;
      } else if (c == '%') {
        if (pos_ + 2 >= text_.size()
            || std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) == 0
            || std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))
                   == 0) {
          fail(ErrorCode::kInvalidSmiles, "'%' needs two digits");
        }
        ring_closure((text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0'));
        pos_ += 3;
      } else if (c == '.') {
        if (pending_) {
          fail(ErrorCode::kInvalidSmiles, "bond before '.'");
        }
        prev_ = -1;
        ++pos_;
      } else {
        fail(ErrorCode::kInvalidSmiles,
             std::string("unexpected character '") + c + "'");
      }
    }

    if (!branches_.empty()) {
      fail(ErrorCode::kUnbalancedParen, "unclosed '('");
    }
    if (!rings_.empty()) {
      fail(ErrorCode::kUnmatchedRing,
           "ring bond " + std::to_string(rings_.begin()->first)
               + " opened but never closed");
    }
    if (pending_) {
      fail(ErrorCode::kInvalidSmiles, "dangling bond at end of input");
    }
    if (atoms_.empty()) {
      fail(ErrorCode::kEmptyInput, "no atoms in SMILES");
    }

    Molecule m = Molecule::from_parts(std::move(atoms_), std::move(bonds_),
                                      std::string(text_));
    m.stereo_ignored_ = stereo_ignored_;
    return m;
  }

private:
  struct OpenRing {
    int atom;
    std::optional<BondOrder> order;
  };

  [[noreturn]] void fail(ErrorCode code, const std::string &what) const {
    throw Error(code, what + " at position " + std::to_string(pos_)
                          + " in \"" + std::string(text_) + "\"");
  }

  BondOrder bond_symbol(char c) {
    switch (c) {
    case '=':
      return BondOrder::kDouble;
    case '#':
      return BondOrder::kTriple;
    case ':':
      return BondOrder::kAromatic;
    case '/':
    case '\\':
      stereo_ignored_ = true;
      return BondOrder::kSingle;
    default:
      return BondOrder::kSingle;
    }
  }

  void add_bond(int a, int b, BondOrder order) {
    if (a == b) {
      fail(ErrorCode::kInvalidSmiles, "atom bonded to itself");
    }
    for (const Bond &e: bonds_) {
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
        fail(ErrorCode::kInvalidSmiles, "duplicate bond");
      }
    }
    bonds_.push_back({ a, b, order });
  }

  void add_atom(Atom atom) {
    atoms_.push_back(std::move(atom));
    const int idx = static_cast<int>(atoms_.size()) - 1;
    if (prev_ >= 0) {
      add_bond(prev_, idx,
               pending_.value_or(default_order(atoms_[prev_], atoms_[idx])));
    }
    pending_.reset();
    prev_ = idx;
  }

  void ring_closure(int digit) {
    if (prev_ < 0) {
      fail(ErrorCode::kInvalidSmiles, "ring bond must follow an atom");
    }
    auto it = rings_.find(digit);
    if (it == rings_.end()) {
      rings_.emplace(digit, OpenRing { prev_, pending_ });
      pending_.reset();
      return;
    }

    const OpenRing open = it->second;
    rings_.erase(it);
    if (open.order && pending_ && *open.order != *pending_) {
      fail(ErrorCode::kInvalidSmiles, "conflicting ring bond orders");
    }
    const BondOrder order =
        pending_ ? *pending_
                 : open.order.value_or(
                     default_order(atoms_[open.atom], atoms_[prev_]));
    add_bond(open.atom, prev_, order);
    pending_.reset();
  }

  Atom organic_atom() {
    const char c = text_[pos_];
    Atom atom;
    if (std::islower(static_cast<unsigned char>(c)) != 0) {
      std::string sym = capitalize(std::string_view(&c, 1));
      if (!is_aromatic_organic(sym)) {
        fail(ErrorCode::kUnknownAtomSymbol,
             std::string("unknown atom symbol '") + c + "'");
      }
      atom.element = std::move(sym);
      atom.aromatic = true;
      ++pos_;
      return atom;
    }

    if (pos_ + 1 < text_.size()) {
      const std::string_view two = text_.substr(pos_, 2);
      if (two == "Cl" || two == "Br") {
        atom.element = std::string(two);
        pos_ += 2;
        return atom;
      }
    }
    const std::string sym(1, c);
    if (!is_organic(sym)) {
      fail(ErrorCode::kUnknownAtomSymbol,
           "atom symbol '" + sym + "' requires brackets or is unknown");
    }
    atom.element = sym;
    ++pos_;
    return atom;
  }

  bool peek_digit() const {
    return pos_ < text_.size()
           && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0;
  }

  int read_number() {
    int v = 0;
    while (peek_digit()) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Atom bracket_atom() {
    ++pos_;  // '['
    Atom atom;
    atom.bracket = true;
    atom.hydrogens = 0;

    if (peek_digit()) {
      read_number();
      stereo_ignored_ = true;
    }

    if (pos_ >= text_.size()) {
      fail(ErrorCode::kInvalidSmiles, "unterminated bracket atom");
    }

    const char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c)) != 0) {
      // Aromatic: try two-letter forms (se, as, te, si) first.
      std::string sym;
      if (pos_ + 1 < text_.size()
          && std::islower(static_cast<unsigned char>(text_[pos_ + 1])) != 0) {
        const std::string cand = capitalize(text_.substr(pos_, 2));
        if (is_aromatic_bracket(cand) && cand.size() == 2) {
          sym = cand;
        }
      }
      if (sym.empty()) {
        sym = capitalize(text_.substr(pos_, 1));
      }
      if (!is_aromatic_bracket(sym)) {
        fail(ErrorCode::kUnknownAtomSymbol,
             "unknown aromatic symbol '" + lowercase(sym) + "'");
      }
      pos_ += sym.size();
      atom.element = std::move(sym);
      atom.aromatic = true;
    } else if (std::isupper(static_cast<unsigned char>(c)) != 0) {
      std::string sym;
      if (pos_ + 1 < text_.size()
          && std::islower(static_cast<unsigned char>(text_[pos_ + 1])) != 0
          && is_element(text_.substr(pos_, 2))) {
        sym = std::string(text_.substr(pos_, 2));
      } else if (is_element(text_.substr(pos_, 1))) {
        sym = std::string(text_.substr(pos_, 1));
      } else {
        fail(ErrorCode::kUnknownAtomSymbol,
             "unknown element in bracket atom");
      }
      pos_ += sym.size();
      atom.element = std::move(sym);
    } else {
      fail(ErrorCode::kUnknownAtomSymbol, "missing element in bracket atom");
    }

    // Chirality: @, @@, @TH1, @AL2, @SP3, @TB12, @OH25 ...
    if (pos_ < text_.size() && text_[pos_] == '@') {
      stereo_ignored_ = true;
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '@') {
        ++pos_;
      } else {
        while (pos_ < text_.size()
               && std::isupper(static_cast<unsigned char>(text_[pos_])) != 0
               && text_[pos_] != 'H') {
          ++pos_;
        }
        read_number();
      }
    }

    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      atom.hydrogens = peek_digit() ? read_number() : 1;
    }

    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_];
      const int unit = sign == '+' ? 1 : -1;
      ++pos_;
      if (peek_digit()) {
        atom.charge = unit * read_number();
      } else {
        int count = 1;
        while (pos_ < text_.size() && text_[pos_] == sign) {
          ++count;
          ++pos_;
        }
        atom.charge = unit * count;
      }
    }

    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      if (!peek_digit()) {
        fail(ErrorCode::kInvalidSmiles, "atom class needs a number");
      }
      read_number();
    }

    if (pos_ >= text_.size() || text_[pos_] != ']') {
      fail(ErrorCode::kInvalidSmiles, "expected ']'");
    }
    ++pos_;
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<int> branches_;
  std::map<int, OpenRing> rings_;
  std::optional<BondOrder> pending_;
  int prev_ = -1;
  bool stereo_ignored_ = false;
};

Molecule parse_smiles(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kEmptyInput, "empty SMILES");
  }
  const auto last = text.find_last_not_of(" \t\r\n");
  return SmilesParser(text.substr(first, last - first + 1)).parse();
}

namespace {

std::string atom_token(const Atom &a) {
  const bool bare = !a.bracket && a.charge == 0
                    && (a.aromatic ? is_aromatic_organic(a.element)
                                   : is_organic(a.element));
  if (bare) {
    return a.aromatic ? lowercase(a.element) : a.element;
  }

  std::string s = "[";
  s += a.aromatic ? lowercase(a.element) : a.element;
  if (a.hydrogens > 0) {
    s += 'H';
    if (a.hydrogens > 1) {
      s += std::to_string(a.hydrogens);
    }
  }
  if (a.charge != 0) {
    s += a.charge > 0 ? '+' : '-';
    const int mag = a.charge > 0 ? a.charge : -a.charge;
    if (mag > 1) {
      s += std::to_string(mag);
    }
  }
  s += ']';
  return s;
}

std::string bond_token(const Atom &a, const Atom &b, BondOrder order) {
  switch (order) {
  case BondOrder::kDouble:
    return "=";
  case BondOrder::kTriple:
    return "#";
  case BondOrder::kAromatic:
    return a.aromatic && b.aromatic ? "" : ":";
  case BondOrder::kSingle:
    return a.aromatic && b.aromatic ? "-" : "";
  }
  return "";
}

class SmilesWriter {
public:
  explicit SmilesWriter(const Molecule &m)
      : mol_(m), order_(m.atoms().size(), -1),
        parent_(m.atoms().size(), -1), children_(m.atoms().size()),
        rings_(m.atoms().size()) { }

  std::string write() {
    std::string out;
    for (int start = 0; start < mol_.atom_count(); ++start) {
      if (order_[start] >= 0) {
        continue;
      }
      classify(start, -1);
      if (!out.empty()) {
        out += '.';
      }
      emit(start, out);
    }
    return out;
  }

private:
  struct RingEnd {
    int partner;
    BondOrder order;
  };

  void classify(int atom, int parent) {
    order_[atom] = counter_++;
    parent_[atom] = parent;
    bool parent_edge_seen = false;
    for (const auto &nb: mol_.adjacency()[atom]) {
      if (nb.atom == parent && !parent_edge_seen) {
        parent_edge_seen = true;
        continue;
      }
      if (order_[nb.atom] < 0) {
        children_[atom].push_back(nb);
        classify(nb.atom, atom);
      } else if (order_[nb.atom] < order_[atom]) {
        // Back edge to an ancestor: record at both ends.
        rings_[nb.atom].push_back({ atom, nb.order });
        rings_[atom].push_back({ nb.atom, nb.order });
      }
    }
  }

  int allocate_digit() {
    int d = 1;
    while (digits_in_use_.count(d) != 0) {
      ++d;
    }
    digits_in_use_.insert(d);
    return d;
  }

  static std::string digit_token(int d) {
    if (d < 10) {
      return std::to_string(d);
    }
    return "%" + std::to_string(d);
  }

  void emit(int atom, std::string &out) {
    const auto &atoms = mol_.atoms();
    out += atom_token(atoms[atom]);

    // Closings first so their digits can be reused by openings.
    for (const RingEnd &r: rings_[atom]) {
      if (order_[r.partner] < order_[atom]) {
        auto key = std::minmax(atom, r.partner);
        const int d = open_digits_.at(key);
        open_digits_.erase(key);
        digits_in_use_.erase(d);
        out += digit_token(d);
      }
    }
    for (const RingEnd &r: rings_[atom]) {
      if (order_[r.partner] > order_[atom]) {
        const int d = allocate_digit();
        open_digits_[std::minmax(atom, r.partner)] = d;
        out += bond_token(atoms[atom], atoms[r.partner], r.order);
        out += digit_token(d);
      }
    }

    const auto &kids = children_[atom];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const bool branch = i + 1 < kids.size();
      if (branch) {
        out += '(';
      }
      out += bond_token(atoms[atom], atoms[kids[i].atom], kids[i].order);
      emit(kids[i].atom, out);
      if (branch) {
        out += ')';
      }
    }
  }

  const Molecule &mol_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<std::vector<Molecule::Neighbor>> children_;
  std::vector<std::vector<RingEnd>> rings_;
  std::map<std::pair<int, int>, int> open_digits_;
  std::set<int> digits_in_use_;
  int counter_ = 0;
};

}  // namespace

std::string write_smiles(const Molecule &m) {
  return SmilesWriter(m).write();
}

}  // namespace synthroute::chem
