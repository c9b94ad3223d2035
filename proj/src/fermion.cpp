// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/fermion.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace avqe {

namespace {

constexpr cplx kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

using TermKey = std::vector<std::pair<std::size_t, bool>>;

TermKey key_of(const FermionTerm& t) {
  TermKey k;
  k.reserve(t.ops.size());
  for (const auto& op : t.ops) k.emplace_back(op.mode, op.creation);
  return k;
}

// True when (a, b) violates normal order: creators first, then descending mode.
bool out_of_order(const LadderOp& a, const LadderOp& b) {
  if (a.creation != b.creation) return !a.creation;
  return a.mode < b.mode;
}

std::string format_coefficient(cplx c) {
  if (c.imag() == 0.0) return fmt::format("{:.17g}", c.real());
  if (c.real() == 0.0) return fmt::format("{:.17g}i", c.imag());
  return fmt::format("({:.17g},{:.17g})", c.real(), c.imag());
}

cplx parse_coefficient(const std::string& tok) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
    return v;
  };
  if (tok.empty()) throw std::invalid_argument("empty coefficient");
  if (tok.front() == '(') {
    const auto comma = tok.find(',');
    if (comma == std::string::npos || tok.back() != ')') throw std::invalid_argument("bad coefficient '" + tok + "'");
    return {to_double(tok.substr(1, comma - 1)), to_double(tok.substr(comma + 1, tok.size() - comma - 2))};
  }
  if (tok.back() == 'i') return {0.0, to_double(tok.substr(0, tok.size() - 1))};
  return {to_double(tok), 0.0};
}

}  // namespace

// ---------------------------------------------------------------------------
// FermionOperator

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& o) {
  for (auto t : o.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(std::move(t));
  }
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx c) {
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

FermionOperator operator*(FermionOperator a, const FermionOperator& b) {
  FermionOperator out;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      FermionTerm t{ta.coefficient * tb.coefficient, ta.ops};
      t.ops.insert(t.ops.end(), tb.ops.begin(), tb.ops.end());
      out.terms_.push_back(std::move(t));
    }
  return out;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& t : terms_) {
    FermionTerm a{std::conj(t.coefficient), {}};
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) a.ops.push_back({it->mode, !it->creation});
    out.terms_.push_back(std::move(a));
  }
  return out;
}

FermionOperator FermionOperator::normal_ordered(double tol) const {
  std::map<TermKey, cplx> acc;
  std::vector<FermionTerm> work(terms_.begin(), terms_.end());
  while (!work.empty()) {
    FermionTerm t = std::move(work.back());
    work.pop_back();
    bool zero = false;
    bool swapped = true;
    while (swapped && !zero) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < t.ops.size(); ++i) {
        const LadderOp a = t.ops[i];
        const LadderOp b = t.ops[i + 1];
        if (a == b) {
          zero = true;  // a_p a_p = a+_p a+_p = 0
          break;
        }
        if (!out_of_order(a, b)) continue;
        if (!a.creation && b.creation && a.mode == b.mode) {
          // a_p a+_p = 1 - a+_p a_p
          FermionTerm contracted{t.coefficient, {}};
          contracted.ops.insert(contracted.ops.end(), t.ops.begin(), t.ops.begin() + static_cast<long>(i));
          contracted.ops.insert(contracted.ops.end(), t.ops.begin() + static_cast<long>(i) + 2, t.ops.end());
          work.push_back(std::move(contracted));
        }
        std::swap(t.ops[i], t.ops[i + 1]);
        t.coefficient = -t.coefficient;
        swapped = true;
      }
    }
    if (!zero) acc[key_of(t)] += t.coefficient;
  }
  FermionOperator out;
  for (const auto& [k, c] : acc) {
    if (std::abs(c) <= tol) continue;
    FermionTerm t{c, {}};
    for (const auto& [mode, cr] : k) t.ops.push_back({mode, cr});
    out.terms_.push_back(std::move(t));
  }
  return out;
}

std::size_t FermionOperator::max_mode() const {
  std::size_t m = 0;
  for (const auto& t : terms_)
    for (const auto& op : t.ops) m = std::max(m, op.mode);
  return m;
}

bool operator==(const FermionOperator& a, const FermionOperator& b) {
  const FermionOperator diff = (a - b).normal_ordered(1e-12);
  return diff.terms().empty();
}

FermionOperator creation(std::size_t p) { return FermionOperator(FermionTerm{1.0, {{p, true}}}); }
FermionOperator annihilation(std::size_t p) { return FermionOperator(FermionTerm{1.0, {{p, false}}}); }

// ---------------------------------------------------------------------------
// PauliString

int PauliString::y_count() const { return std::popcount(x & z); }

char PauliString::at(std::size_t q) const {
  const bool bx = (x >> q) & 1u;
  const bool bz = (z >> q) & 1u;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  PauliProduct out;
  out.string = {a.x ^ b.x, a.z ^ b.z};
  const int phase = a.y_count() + b.y_count() - out.string.y_count() + 2 * std::popcount(a.z & b.x);
  out.phase = ((phase % 4) + 4) % 4;
  return out;
}

PauliString parse_pauli_string(std::string_view s) {
  if (s.size() > 64) throw std::invalid_argument("Pauli strings are limited to 64 qubits");
  PauliString p;
  for (std::size_t q = 0; q < s.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (s[q]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default: throw std::invalid_argument(fmt::format("invalid Pauli character '{}'", s[q]));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// PauliOperator

PauliOperator::PauliOperator(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > 64) throw std::invalid_argument("at most 64 qubits are supported");
}

PauliOperator PauliOperator::identity(std::size_t n_qubits, cplx c) {
  PauliOperator op(n_qubits);
  op.add_term({}, c);
  return op;
}

PauliOperator PauliOperator::from_string(std::size_t n_qubits, std::string_view s, cplx c) {
  if (s.size() != n_qubits) throw std::invalid_argument("Pauli string length does not match qubit count");
  PauliOperator op(n_qubits);
  op.add_term(parse_pauli_string(s), c);
  return op;
}

cplx PauliOperator::coefficient(const PauliString& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

void PauliOperator::add_term(const PauliString& s, cplx c) {
  if (n_qubits_ < 64 && ((s.x | s.z) >> n_qubits_) != 0)
    throw std::out_of_range("Pauli string acts outside the register");
  terms_[s] += c;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
  if (o.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  for (const auto& [s, c] : o.terms_)
    if ((terms_[s] += c) == cplx{}) terms_.erase(s);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
  if (o.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  for (const auto& [s, c] : o.terms_)
    if ((terms_[s] -= c) == cplx{}) terms_.erase(s);
  return *this;
}

PauliOperator& PauliOperator::operator*=(cplx c) {
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) throw std::invalid_argument("qubit count mismatch");
  PauliOperator out(a.n_qubits_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      const PauliProduct p = multiply(sa, sb);
      out.terms_[p.string] += kIPow[p.phase] * ca * cb;
    }
  return out;
}

PauliOperator& PauliOperator::simplify(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  return *this;
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator out(n_qubits_);
  for (const auto& [s, c] : terms_) out.terms_[s] = std::conj(c);
  return out;
}

bool PauliOperator::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) { return std::abs(kv.second.imag()) <= tol; });
}

bool PauliOperator::is_anti_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) { return std::abs(kv.second.real()) <= tol; });
}

void PauliOperator::write_text(std::ostream& out) const {
  for (const auto& [s, c] : terms_) {
    std::string str(n_qubits_, 'I');
    for (std::size_t q = 0; q < n_qubits_; ++q) str[q] = s.at(q);
    out << format_coefficient(c) << "  " << str << '\n';
  }
}

std::string PauliOperator::to_text() const {
  std::ostringstream os;
  write_text(os);
  return os.str();
}

PauliOperator PauliOperator::parse_text(std::size_t n_qubits, std::string_view text) {
  PauliOperator op(n_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string coeff, str;
    if (!(ls >> coeff)) continue;
    if (!(ls >> str)) throw std::invalid_argument("Pauli term line lacks a string: '" + line + "'");
    if (str.size() != n_qubits) throw std::invalid_argument("Pauli string length mismatch: '" + str + "'");
    op.add_term(parse_pauli_string(str), parse_coefficient(coeff));
  }
  return op;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("commutator: qubit count mismatch");
  PauliOperator out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      // Pauli strings either commute (contribute 0) or anticommute (contribute 2ab).
      const int sympl = std::popcount(sa.x & sb.z) + std::popcount(sa.z & sb.x);
      if (sympl % 2 == 0) continue;
      const PauliProduct p = multiply(sa, sb);
      out.add_term(p.string, 2.0 * kIPow[p.phase] * ca * cb);
    }
  return out.simplify();
}

// ---------------------------------------------------------------------------
// Jordan-Wigner

namespace {

PauliOperator jw_ladder(const LadderOp& op, std::size_t n_qubits) {
  if (op.mode >= n_qubits)
    throw std::out_of_range(fmt::format("mode {} outside {}-qubit register", op.mode, n_qubits));
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const std::uint64_t parity = bit - 1;
  PauliOperator out(n_qubits);
  // a+_p = (X_p - iY_p)/2 Z_{<p},  a_p = (X_p + iY_p)/2 Z_{<p}
  out.add_term({bit, parity}, 0.5);
  out.add_term({bit, parity | bit}, op.creation ? cplx{0.0, -0.5} : cplx{0.0, 0.5});
  return out;
}

}  // namespace

PauliOperator jordan_wigner(const FermionTerm& t, std::size_t n_qubits) {
  PauliOperator out = PauliOperator::identity(n_qubits, t.coefficient);
  for (const auto& op : t.ops) out = out * jw_ladder(op, n_qubits);
  return out.simplify();
}

PauliOperator jordan_wigner(const FermionOperator& f, std::size_t n_qubits) {
  PauliOperator out(n_qubits);
  for (const auto& t : f.terms()) out += jordan_wigner(t, n_qubits);
  return out.simplify();
}

PauliOperator hamiltonian_to_qubits(const SpinOrbitalHamiltonian& h) {
  const std::size_t n = h.n_so;
  std::vector<PauliOperator> cre, ann;
  for (std::size_t p = 0; p < n; ++p) {
    cre.push_back(jw_ladder({p, true}, n));
    ann.push_back(jw_ladder({p, false}, n));
  }
  PauliOperator out = PauliOperator::identity(n, h.e_nuc);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const double v = h.one_body(p, q);
      if (v != 0.0) out += (cre[p] * ann[q]) * cplx{v, 0.0};
    }
  // 1/4 sum_{PQRS} g a+P a+Q aS aR == sum_{P<Q, R<S} g a+P a+Q aS aR
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const PauliOperator pq = cre[p] * cre[q];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
          const double v = h.two_body(p, q, r, s);
          if (v == 0.0) continue;
          out += (pq * (ann[s] * ann[r])) * cplx{v, 0.0};
        }
    }
  out.simplify();
  // Real integrals give a real-symmetric matrix: only real coefficients survive.
  PauliOperator real(n);
  for (const auto& [s, c] : out.terms()) {
    if (std::abs(c.imag()) > 1e-10) throw std::logic_error("qubit Hamiltonian acquired an imaginary coefficient");
    real.add_term(s, {c.real(), 0.0});
  }
  return real.simplify();
}

PauliOperator number_operator(std::size_t n_qubits) {
  FermionOperator f;
  for (std::size_t p = 0; p < n_qubits; ++p) f += creation(p) * annihilation(p);
  return jordan_wigner(f, n_qubits);
}

PauliOperator sz_operator(std::size_t n_qubits) {
  FermionOperator f;
  for (std::size_t p = 0; p < n_qubits; ++p) {
    FermionOperator np = creation(p) * annihilation(p);
    np *= (p % 2 == 0) ? 0.5 : -0.5;
    f += np;
  }
  return jordan_wigner(f, n_qubits);
}

}  // namespace avqe
