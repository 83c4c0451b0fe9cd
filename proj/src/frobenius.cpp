#include "krsl2/frobenius.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace krsl2 {

namespace {

void check_slot(const AElem& x, int slot, int need, const char* op) {
  if (slot < 0 || slot + need > x.arity())
    throw std::out_of_range(std::string(op) + ": slot " + std::to_string(slot) + " out of range for arity " +
                            std::to_string(x.arity()));
}

bool bit(Word w, int s) { return (w >> s) & 1u; }

// Remove bit s, shifting higher bits down.
Word drop_bit(Word w, int s) {
  Word low = w & ((Word(1) << s) - 1);
  Word high = (w >> (s + 1)) << s;
  return low | high;
}

// Insert value v at bit s, shifting higher bits up.
Word insert_bit(Word w, int s, bool v) {
  Word low = w & ((Word(1) << s) - 1);
  Word high = (w >> s) << (s + 1);
  return low | high | (Word(v) << s);
}

}  // namespace

int word_degree(Word w, int arity) {
  int xs = std::popcount(w);
  return xs - (arity - xs);
}

AElem AElem::basis(int arity, Word w, MultiPoly coef) {
  AElem e(arity);
  e.add(w, coef);
  return e;
}

MultiPoly AElem::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MultiPoly() : it->second;
}

void AElem::add(Word w, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[w];
  slot += c;
  if (slot.is_zero()) terms_.erase(w);
}

AElem& AElem::operator+=(const AElem& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("AElem: arity mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AElem& AElem::operator-=(const AElem& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("AElem: arity mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AElem AElem::scaled(const MultiPoly& c) const {
  AElem r(arity_);
  for (const auto& [w, k] : terms_) r.add(w, k * c);
  return r;
}

std::optional<int> AElem::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    auto cd = c.homogeneous_degree();
    if (!cd) return std::nullopt;
    int t = *cd + word_degree(w, arity_);
    if (d && *d != t) return std::nullopt;
    d = t;
  }
  return d;
}

std::string AElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (int s = 0; s < arity_; ++s) {
      if (s) word += "*";
      word += bit(w, s) ? "X" : "1";
    }
    if (arity_ == 0) word = "1";
    out += "(" + c.to_string() + ")" + word;
  }
  return out;
}

AElem tensor(const AElem& l, const AElem& r) {
  AElem out(l.arity() + r.arity());
  for (const auto& [wl, cl] : l.terms())
    for (const auto& [wr, cr] : r.terms()) out.add(wl | (wr << l.arity()), cl * cr);
  return out;
}

AElem m(const AElem& x, int slot) {
  check_slot(x, slot, 2, "m");
  AElem out(x.arity() - 1);
  for (const auto& [w, c] : x.terms()) {
    bool p = bit(w, slot), q = bit(w, slot + 1);
    Word rest = drop_bit(w, slot + 1) & ~(Word(1) << slot);
    if (p && q) {
      out.add(rest | (Word(1) << slot), c * MultiPoly::h());
      out.add(rest, c * MultiPoly::a());
    } else {
      out.add(rest | (Word(p || q) << slot), c);
    }
  }
  return out;
}

AElem delta(const AElem& x, int slot) {
  check_slot(x, slot, 1, "delta");
  AElem out(x.arity() + 1);
  for (const auto& [w, c] : x.terms()) {
    Word base = insert_bit(w & ~(Word(1) << slot), slot + 1, false);
    Word x1 = base | (Word(1) << slot);
    Word x2 = base | (Word(1) << (slot + 1));
    if (!bit(w, slot)) {
      out.add(x2, c);
      out.add(x1, c);
      out.add(base, -(c * MultiPoly::h()));
    } else {
      out.add(x1 | x2, c);
      out.add(base, c * MultiPoly::a());
    }
  }
  return out;
}

AElem eps(const AElem& x, int slot) {
  check_slot(x, slot, 1, "eps");
  AElem out(x.arity() - 1);
  for (const auto& [w, c] : x.terms())
    if (bit(w, slot)) out.add(drop_bit(w, slot), c);
  return out;
}

AElem iota(const AElem& x, int slot) {
  if (slot < 0 || slot > x.arity()) throw std::out_of_range("iota: slot out of range");
  AElem out(x.arity() + 1);
  for (const auto& [w, c] : x.terms()) out.add(insert_bit(w, slot, false), c);
  return out;
}

AElem dot(const AElem& x, int slot) {
  check_slot(x, slot, 1, "dot");
  AElem out(x.arity());
  for (const auto& [w, c] : x.terms()) {
    if (!bit(w, slot)) {
      out.add(w | (Word(1) << slot), c);
    } else {
      out.add(w, c * MultiPoly::h());
      out.add(w & ~(Word(1) << slot), c * MultiPoly::a());
    }
  }
  return out;
}

AElem permute(const AElem& x, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != x.arity()) throw std::invalid_argument("permute: size mismatch");
  AElem out(x.arity());
  for (const auto& [w, c] : x.terms()) {
    Word nw = 0;
    for (int k = 0; k < x.arity(); ++k)
      if (bit(w, perm[k])) nw |= Word(1) << k;
    out.add(nw, c);
  }
  return out;
}

CobordismMap& CobordismMap::merge(int slot) {
  pieces_.push_back({CobordismPiece::Kind::Merge, slot, {}});
  return *this;
}
CobordismMap& CobordismMap::split(int slot) {
  pieces_.push_back({CobordismPiece::Kind::Split, slot, {}});
  return *this;
}
CobordismMap& CobordismMap::cup(int slot) {
  pieces_.push_back({CobordismPiece::Kind::Cup, slot, {}});
  return *this;
}
CobordismMap& CobordismMap::cap(int slot) {
  pieces_.push_back({CobordismPiece::Kind::Cap, slot, {}});
  return *this;
}
CobordismMap& CobordismMap::dot(int slot) {
  pieces_.push_back({CobordismPiece::Kind::Dot, slot, {}});
  return *this;
}
CobordismMap& CobordismMap::permute(std::vector<int> perm) {
  pieces_.push_back({CobordismPiece::Kind::Permute, 0, std::move(perm)});
  return *this;
}

int CobordismMap::target_arity() const {
  int k = source_arity_;
  for (const auto& p : pieces_) {
    switch (p.kind) {
      case CobordismPiece::Kind::Merge:
      case CobordismPiece::Kind::Cap: --k; break;
      case CobordismPiece::Kind::Split:
      case CobordismPiece::Kind::Cup: ++k; break;
      default: break;
    }
  }
  return k;
}

int CobordismMap::degree() const {
  int d = 0;
  for (const auto& p : pieces_) {
    switch (p.kind) {
      case CobordismPiece::Kind::Merge:
      case CobordismPiece::Kind::Split: d += 1; break;
      case CobordismPiece::Kind::Cup:
      case CobordismPiece::Kind::Cap: d -= 1; break;
      case CobordismPiece::Kind::Dot: d += 2; break;
      case CobordismPiece::Kind::Permute: break;
    }
  }
  return d;
}

int CobordismMap::merge_count() const {
  int n = 0;
  for (const auto& p : pieces_) n += p.kind == CobordismPiece::Kind::Merge;
  return n;
}

int CobordismMap::split_count() const {
  int n = 0;
  for (const auto& p : pieces_) n += p.kind == CobordismPiece::Kind::Split;
  return n;
}

AElem CobordismMap::apply(const AElem& x) const {
  if (x.arity() != source_arity_) throw std::invalid_argument("CobordismMap: arity mismatch");
  AElem y = x;
  for (const auto& p : pieces_) {
    switch (p.kind) {
      case CobordismPiece::Kind::Merge: y = krsl2::m(y, p.slot); break;
      case CobordismPiece::Kind::Split: y = krsl2::delta(y, p.slot); break;
      case CobordismPiece::Kind::Cup: y = krsl2::iota(y, p.slot); break;
      case CobordismPiece::Kind::Cap: y = krsl2::eps(y, p.slot); break;
      case CobordismPiece::Kind::Dot: y = krsl2::dot(y, p.slot); break;
      case CobordismPiece::Kind::Permute: y = krsl2::permute(y, p.perm); break;
    }
  }
  return sign_ < 0 ? y.scaled(MultiPoly(-1)) : y;
}

std::string CobordismMap::describe() const {
  std::ostringstream os;
  os << (sign_ < 0 ? "-" : "+");
  for (const auto& p : pieces_) {
    switch (p.kind) {
      case CobordismPiece::Kind::Merge: os << " m@" << p.slot; break;
      case CobordismPiece::Kind::Split: os << " delta@" << p.slot; break;
      case CobordismPiece::Kind::Cup: os << " iota@" << p.slot; break;
      case CobordismPiece::Kind::Cap: os << " eps@" << p.slot; break;
      case CobordismPiece::Kind::Dot: os << " dot@" << p.slot; break;
      case CobordismPiece::Kind::Permute: {
        os << " perm(";
        for (std::size_t k = 0; k < p.perm.size(); ++k) os << (k ? "," : "") << p.perm[k];
        os << ")";
        break;
      }
    }
  }
  return os.str();
}

}  // namespace krsl2
