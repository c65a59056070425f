//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patchem/chem/elements.hpp"
#include "patchem/chem/molecule.hpp"
#include "patchem/chem/smiles.hpp"

namespace patchem::chem {

std::string_view diagnostic_kind_name(DiagnosticKind kind) {
  switch (kind) {
  case DiagnosticKind::kUnbalancedParen:
    return "UnbalancedParen";
  case DiagnosticKind::kUnclosedRing:
    return "UnclosedRing";
  case DiagnosticKind::kBadElement:
    return "BadElement";
  case DiagnosticKind::kBadCharge:
    return "BadCharge";
  case DiagnosticKind::kBadRingDigit:
    return "BadRingDigit";
  case DiagnosticKind::kEmptyInput:
    return "EmptyInput";
  case DiagnosticKind::kUnsupportedFeature:
    return "UnsupportedFeature";
  }
  return "Unknown";
}

SmilesError::SmilesError(ParseDiagnostic diagnostic)
    : Error(std::string(diagnostic_kind_name(diagnostic.kind)) + " at byte " +
            std::to_string(diagnostic.byte_offset) + ": " +
            diagnostic.message),
      diagnostic_(std::move(diagnostic)) {}

namespace {

[[noreturn]] void fail(std::size_t offset, DiagnosticKind kind,
                       std::string message) {
  throw SmilesError(ParseDiagnostic{offset, kind, std::move(message)});
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

enum class LastToken { kNone, kAtom, kBond, kOpenParen, kCloseParen, kDot,
                       kRingDigit };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Molecule run();

 private:
  struct RawBond {
    int a;
    int b;
    BondOrder order;
    bool implicit_between_aromatics;  // may demote to single post ring check
    bool explicit_aromatic;
    std::size_t offset;
  };
  struct RingOpen {
    int atom;
    char bond_char;  // 0 when unspecified
    std::size_t offset;
  };

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Atom> atoms_;
  std::vector<std::size_t> atom_offsets_;
  std::vector<RawBond> bonds_;
  std::vector<StereoAnnotation> annotations_;
  std::vector<std::pair<int, std::size_t>> branch_stack_;
  std::map<int, RingOpen> open_rings_;
  int prev_atom_ = -1;
  char pending_bond_ = 0;
  std::size_t pending_bond_offset_ = 0;
  LastToken last_ = LastToken::kNone;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool done() const { return pos_ >= text_.size(); }

  void parse_char();
  void parse_bracket_atom();
  void parse_ring_digit(int digit, std::size_t offset);
  int add_atom(Atom atom, std::size_t offset);
  void connect(int a, int b, char bond_char, std::size_t offset);
  bool bond_exists(int a, int b) const;
  Molecule finish();
};

Molecule Parser::run() {
  // Offsets always refer to the original string; surrounding whitespace is
  // skipped, not removed.
  std::size_t end = text_.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(text_[end - 1]))) {
    --end;
  }
  while (pos_ < end && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
    ++pos_;
  }
  if (pos_ == end) {
    fail(0, DiagnosticKind::kEmptyInput, "no atoms in input");
  }
  text_ = text_.substr(0, end);
  while (!done()) {
    parse_char();
  }
  return finish();
}

void Parser::parse_char() {
  const std::size_t at = pos_;
  const char c = text_[pos_];
  switch (c) {
  case '(':
    if (last_ == LastToken::kOpenParen) {
      fail(at, DiagnosticKind::kUnbalancedParen,
           "branch must begin with an atom");
    }
    if (prev_atom_ < 0) {
      fail(at, DiagnosticKind::kUnbalancedParen,
           "branch opened before any atom");
    }
    if (pending_bond_ != 0) {
      fail(at, DiagnosticKind::kBadElement, "expected an atom after bond");
    }
    branch_stack_.emplace_back(prev_atom_, at);
    last_ = LastToken::kOpenParen;
    ++pos_;
    return;
  case ')':
    if (branch_stack_.empty()) {
      fail(at, DiagnosticKind::kUnbalancedParen, "no branch to close");
    }
    if (last_ == LastToken::kOpenParen) {
      fail(at, DiagnosticKind::kUnbalancedParen, "empty branch");
    }
    if (pending_bond_ != 0) {
      fail(at, DiagnosticKind::kBadElement,
           "dangling bond at end of branch");
    }
    prev_atom_ = branch_stack_.back().first;
    branch_stack_.pop_back();
    last_ = LastToken::kCloseParen;
    ++pos_;
    return;
  case '.':
    if (!branch_stack_.empty()) {
      fail(at, DiagnosticKind::kUnsupportedFeature,
           "dot disconnection inside a branch");
    }
    if (pending_bond_ != 0 || prev_atom_ < 0) {
      fail(at, DiagnosticKind::kBadElement, "expected an atom");
    }
    prev_atom_ = -1;
    last_ = LastToken::kDot;
    ++pos_;
    return;
  case '-':
  case '=':
  case '#':
  case ':':
  case '/':
  case '\\':
    if (pending_bond_ != 0) {
      fail(at, DiagnosticKind::kBadElement, "two bond symbols in a row");
    }
    if (prev_atom_ < 0) {
      fail(at, DiagnosticKind::kBadElement, "bond before any atom");
    }
    pending_bond_ = c;
    pending_bond_offset_ = at;
    last_ = LastToken::kBond;
    ++pos_;
    return;
  case '$':
    fail(at, DiagnosticKind::kUnsupportedFeature,
         "quadruple bonds are not supported");
  case '*':
    fail(at, DiagnosticKind::kUnsupportedFeature,
         "wildcard atoms are not supported");
  case '%': {
    if (pos_ + 2 >= text_.size() || !is_digit(text_[pos_ + 1]) ||
        !is_digit(text_[pos_ + 2])) {
      fail(at, DiagnosticKind::kBadRingDigit,
           "'%' must be followed by two digits");
    }
    int number = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
    pos_ += 3;
    parse_ring_digit(number, at);
    return;
  }
  case '[':
    parse_bracket_atom();
    return;
  default:
    break;
  }
  if (is_digit(c)) {
    ++pos_;
    parse_ring_digit(c - '0', at);
    return;
  }
  // Organic-subset atom tokens.
  if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
    pos_ += 2;
    add_atom(Atom{17, 0, std::nullopt, false, std::nullopt}, at);
    return;
  }
  if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
    pos_ += 2;
    add_atom(Atom{35, 0, std::nullopt, false, std::nullopt}, at);
    return;
  }
  int z = 0;
  bool aromatic = false;
  switch (c) {
  case 'B': z = 5; break;
  case 'C': z = 6; break;
  case 'N': z = 7; break;
  case 'O': z = 8; break;
  case 'P': z = 15; break;
  case 'S': z = 16; break;
  case 'F': z = 9; break;
  case 'I': z = 53; break;
  case 'b': z = 5; aromatic = true; break;
  case 'c': z = 6; aromatic = true; break;
  case 'n': z = 7; aromatic = true; break;
  case 'o': z = 8; aromatic = true; break;
  case 'p': z = 15; aromatic = true; break;
  case 's': z = 16; aromatic = true; break;
  default:
    if (std::isalpha(static_cast<unsigned char>(c))) {
      fail(at, DiagnosticKind::kBadElement,
           std::string("element '") + c +
               "' must be written as a bracket atom");
    }
    fail(at, DiagnosticKind::kUnsupportedFeature,
         std::string("unexpected character '") + c + "'");
  }
  ++pos_;
  add_atom(Atom{z, 0, std::nullopt, aromatic, std::nullopt}, at);
}

void Parser::parse_bracket_atom() {
  const std::size_t open_at = pos_;
  ++pos_;  // '['
  auto need = [&](bool ok, DiagnosticKind kind, const std::string &msg) {
    if (!ok) {
      fail(pos_ < text_.size() ? pos_ : open_at, kind, msg);
    }
  };
  need(!done(), DiagnosticKind::kUnbalancedParen, "unterminated bracket atom");

  Atom atom;
  atom.explicit_h = 0;

  // Optional isotope.
  if (is_digit(peek())) {
    int iso = 0;
    int digits = 0;
    while (!done() && is_digit(peek())) {
      iso = iso * 10 + (peek() - '0');
      ++digits;
      ++pos_;
      if (digits > 3) {
        fail(open_at + 1, DiagnosticKind::kBadElement, "isotope too large");
      }
    }
    atom.isotope = iso;
  }

  // Element symbol.
  const std::size_t sym_at = pos_;
  need(!done(), DiagnosticKind::kUnbalancedParen, "unterminated bracket atom");
  char first = peek();
  if (std::isupper(static_cast<unsigned char>(first))) {
    std::string sym(1, first);
    ++pos_;
    if (!done() && std::islower(static_cast<unsigned char>(peek()))) {
      std::string two = sym + peek();
      if (atomic_number_of(two)) {
        sym = two;
        ++pos_;
      }
    }
    auto z = atomic_number_of(sym);
    if (!z) {
      fail(sym_at, DiagnosticKind::kBadElement, "unknown element '" + sym +
                                                    "'");
    }
    atom.atomic_number = *z;
  } else if (std::islower(static_cast<unsigned char>(first))) {
    std::string sym(1, first);
    ++pos_;
    if (!done() && std::islower(static_cast<unsigned char>(peek()))) {
      std::string two = sym + peek();
      if (two == "se" || two == "as") {
        sym = two;
        ++pos_;
      }
    }
    int z = 0;
    if (sym == "b") z = 5;
    else if (sym == "c") z = 6;
    else if (sym == "n") z = 7;
    else if (sym == "o") z = 8;
    else if (sym == "p") z = 15;
    else if (sym == "s") z = 16;
    else if (sym == "se") z = 34;
    else if (sym == "as") z = 33;
    else {
      fail(sym_at, DiagnosticKind::kBadElement,
           "unknown aromatic symbol '" + sym + "'");
    }
    atom.atomic_number = z;
    atom.aromatic = true;
  } else {
    fail(sym_at, DiagnosticKind::kBadElement,
         "expected an element symbol in bracket atom");
  }

  bool saw_h = false;
  bool saw_charge = false;
  bool saw_chirality = false;
  while (true) {
    need(!done(), DiagnosticKind::kUnbalancedParen,
         "unterminated bracket atom");
    char c = peek();
    const std::size_t at = pos_;
    if (c == ']') {
      ++pos_;
      break;
    }
    if (c == '@') {
      if (saw_chirality) {
        fail(at, DiagnosticKind::kUnsupportedFeature,
             "duplicate chirality mark");
      }
      saw_chirality = true;
      ++pos_;
      if (!done() && peek() == '@') {
        ++pos_;
      }
      if (!done() && std::isupper(static_cast<unsigned char>(peek())) &&
          peek() != 'H') {
        fail(at, DiagnosticKind::kUnsupportedFeature,
             "extended chirality classes are not supported");
      }
      StereoAnnotation ann;
      ann.kind = StereoAnnotation::Kind::kTetrahedral;
      ann.atom = static_cast<int>(atoms_.size());  // atom being built
      annotations_.push_back(ann);
      continue;
    }
    if (c == 'H') {
      if (saw_h) {
        fail(at, DiagnosticKind::kBadElement, "duplicate hydrogen count");
      }
      if (atom.atomic_number == 1) {
        fail(at, DiagnosticKind::kUnsupportedFeature,
             "hydrogen count on a hydrogen atom");
      }
      saw_h = true;
      ++pos_;
      int h = 1;
      if (!done() && is_digit(peek())) {
        h = peek() - '0';
        ++pos_;
      }
      atom.explicit_h = h;
      continue;
    }
    if (c == '+' || c == '-') {
      if (saw_charge) {
        fail(at, DiagnosticKind::kBadCharge, "duplicate charge");
      }
      saw_charge = true;
      int sign = c == '+' ? 1 : -1;
      int magnitude = 1;
      ++pos_;
      if (!done() && peek() == c) {
        while (!done() && peek() == c) {
          ++magnitude;
          ++pos_;
        }
      } else if (!done() && is_digit(peek())) {
        magnitude = 0;
        while (!done() && is_digit(peek())) {
          magnitude = magnitude * 10 + (peek() - '0');
          ++pos_;
          if (magnitude > 99) {
            break;
          }
        }
      }
      int charge = sign * magnitude;
      if (charge < -4 || charge > 4) {
        fail(at, DiagnosticKind::kBadCharge,
             "formal charge outside [-4, +4]");
      }
      atom.formal_charge = charge;
      continue;
    }
    if (c == ':') {
      fail(at, DiagnosticKind::kUnsupportedFeature,
           "atom maps are not supported");
    }
    fail(at, DiagnosticKind::kBadElement,
         std::string("unexpected character '") + c + "' in bracket atom");
  }

  add_atom(std::move(atom), open_at);
}

void Parser::parse_ring_digit(int digit, std::size_t offset) {
  if (prev_atom_ < 0 ||
      (last_ != LastToken::kAtom && last_ != LastToken::kRingDigit &&
       last_ != LastToken::kBond)) {
    fail(offset, DiagnosticKind::kBadRingDigit,
         "ring bond must follow an atom");
  }
  char bond_char = pending_bond_;
  pending_bond_ = 0;

  auto it = open_rings_.find(digit);
  if (it == open_rings_.end()) {
    open_rings_[digit] = RingOpen{prev_atom_, bond_char, offset};
    last_ = LastToken::kRingDigit;
    return;
  }
  RingOpen open = it->second;
  open_rings_.erase(it);
  if (open.atom == prev_atom_) {
    fail(offset, DiagnosticKind::kBadRingDigit, "ring bond to the same atom");
  }
  if (bond_exists(open.atom, prev_atom_)) {
    fail(offset, DiagnosticKind::kBadRingDigit,
         "duplicate bond between ring atoms");
  }
  char resolved = 0;
  if (open.bond_char != 0 && bond_char != 0 && open.bond_char != bond_char) {
    // Opposite slash directions describe the same single bond.
    bool slashes = (open.bond_char == '/' || open.bond_char == '\\') &&
                   (bond_char == '/' || bond_char == '\\');
    if (!slashes) {
      fail(offset, DiagnosticKind::kBadRingDigit,
           "conflicting ring bond orders");
    }
    resolved = bond_char;
  } else {
    resolved = bond_char != 0 ? bond_char : open.bond_char;
  }
  connect(open.atom, prev_atom_, resolved, offset);
  last_ = LastToken::kRingDigit;
}

int Parser::add_atom(Atom atom, std::size_t offset) {
  int index = static_cast<int>(atoms_.size());
  atoms_.push_back(std::move(atom));
  atom_offsets_.push_back(offset);
  if (prev_atom_ >= 0) {
    char bond_char = pending_bond_;
    pending_bond_ = 0;
    connect(prev_atom_, index, bond_char, offset);
  } else if (pending_bond_ != 0) {
    fail(pending_bond_offset_, DiagnosticKind::kBadElement,
         "bond with no preceding atom");
  }
  prev_atom_ = index;
  last_ = LastToken::kAtom;
  return index;
}

bool Parser::bond_exists(int a, int b) const {
  for (const RawBond &bond : bonds_) {
    if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a)) {
      return true;
    }
  }
  return false;
}

void Parser::connect(int a, int b, char bond_char, std::size_t offset) {
  RawBond bond{a, b, BondOrder::kSingle, false, false, offset};
  const bool both_aromatic =
      atoms_[static_cast<std::size_t>(a)].aromatic &&
      atoms_[static_cast<std::size_t>(b)].aromatic;
  switch (bond_char) {
  case 0:
    if (both_aromatic) {
      bond.order = BondOrder::kAromatic;
      bond.implicit_between_aromatics = true;
    }
    break;
  case '-':
    break;
  case '=':
    bond.order = BondOrder::kDouble;
    break;
  case '#':
    bond.order = BondOrder::kTriple;
    break;
  case ':':
    if (!both_aromatic) {
      fail(offset, DiagnosticKind::kUnsupportedFeature,
           "aromatic bond between non-aromatic atoms");
    }
    bond.order = BondOrder::kAromatic;
    bond.explicit_aromatic = true;
    break;
  case '/':
  case '\\': {
    StereoAnnotation ann;
    ann.kind = StereoAnnotation::Kind::kBondDirection;
    ann.bond = static_cast<int>(bonds_.size());
    annotations_.push_back(ann);
    break;
  }
  default:
    fail(offset, DiagnosticKind::kUnsupportedFeature, "unknown bond symbol");
  }
  bonds_.push_back(bond);
}

Molecule Parser::finish() {
  if (pending_bond_ != 0) {
    fail(pending_bond_offset_, DiagnosticKind::kBadElement,
         "dangling bond at end of input");
  }
  if (last_ == LastToken::kDot) {
    fail(text_.size() - 1, DiagnosticKind::kBadElement,
         "expected an atom after '.'");
  }
  if (!branch_stack_.empty()) {
    fail(branch_stack_.back().second, DiagnosticKind::kUnbalancedParen,
         "unclosed branch");
  }
  if (!open_rings_.empty()) {
    std::size_t first = text_.size();
    for (const auto &[digit, open] : open_rings_) {
      first = std::min(first, open.offset);
    }
    fail(first, DiagnosticKind::kUnclosedRing, "unclosed ring bond");
  }
  if (atoms_.empty()) {
    fail(0, DiagnosticKind::kEmptyInput, "no atoms in input");
  }

  auto build = [&]() -> Molecule {
    std::vector<Bond> bonds;
    bonds.reserve(bonds_.size());
    for (const RawBond &rb : bonds_) {
      bonds.push_back(Bond{rb.a, rb.b, rb.order});
    }
    return Molecule(atoms_, std::move(bonds), annotations_);
  };

  try {
    Molecule provisional = build();
    // Implicit bonds between aromatic atoms are aromatic only inside rings;
    // a biphenyl-style bridge written without a bond symbol is single.
    bool changed = false;
    for (std::size_t bi = 0; bi < bonds_.size(); ++bi) {
      if (bonds_[bi].order != BondOrder::kAromatic ||
          provisional.bond_in_ring(static_cast<int>(bi))) {
        continue;
      }
      if (bonds_[bi].explicit_aromatic) {
        fail(bonds_[bi].offset, DiagnosticKind::kUnsupportedFeature,
             "aromatic bond outside a ring");
      }
      bonds_[bi].order = BondOrder::kSingle;
      changed = true;
    }
    Molecule result = changed ? build() : std::move(provisional);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i].aromatic && !result.atom_in_ring(static_cast<int>(i))) {
        fail(atom_offsets_[i], DiagnosticKind::kUnsupportedFeature,
             "aromatic atom outside a ring");
      }
    }
    return result;
  } catch (const SmilesError &) {
    throw;
  } catch (const Error &e) {
    // Structural validation failures from Molecule construction.
    fail(0, DiagnosticKind::kUnsupportedFeature, e.what());
  }
}

}  // namespace

Molecule parse_smiles(std::string_view text) {
  if (text.empty()) {
    throw SmilesError(
        ParseDiagnostic{0, DiagnosticKind::kEmptyInput, "empty input"});
  }
  return Parser(text).run();
}

}  // namespace patchem::chem
