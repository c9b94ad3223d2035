// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/hamio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include <fmt/format.h>

namespace avqe {

MolecularHamiltonian::MolecularHamiltonian(std::size_t n_orb, std::size_t n_elec, int two_ms)
    : n_spatial(n_orb),
      n_electrons(n_elec),
      ms2(two_ms),
      h(n_orb * n_orb, 0.0),
      g(n_orb * n_orb * n_orb * n_orb, 0.0) {}

void MolecularHamiltonian::set_two_body_symmetric(std::size_t p, std::size_t q, std::size_t r,
                                                  std::size_t s, double v) {
  two_body(p, q, r, s) = v;
  two_body(q, p, r, s) = v;
  two_body(p, q, s, r) = v;
  two_body(q, p, s, r) = v;
  two_body(r, s, p, q) = v;
  two_body(s, r, p, q) = v;
  two_body(r, s, q, p) = v;
  two_body(s, r, q, p) = v;
}

std::size_t MolecularHamiltonian::n_alpha() const {
  return static_cast<std::size_t>((static_cast<long>(n_electrons) + ms2) / 2);
}

std::size_t MolecularHamiltonian::n_beta() const {
  return static_cast<std::size_t>((static_cast<long>(n_electrons) - ms2) / 2);
}

void MolecularHamiltonian::validate(double tol) const {
  const std::size_t n = n_spatial;
  if (h.size() != n * n || g.size() != n * n * n * n)
    throw std::invalid_argument("integral array sizes do not match n_spatial");
  if (n_electrons > 2 * n) throw std::invalid_argument("n_electrons exceeds 2*n_spatial");
  if ((static_cast<long>(n_electrons) + ms2) % 2 != 0 || std::abs(ms2) > static_cast<int>(n_electrons))
    throw std::invalid_argument("ms2 inconsistent with n_electrons");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (std::abs(one_body(p, q) - one_body(q, p)) > tol)
        throw std::invalid_argument(fmt::format("h not symmetric at ({},{})", p, q));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = two_body(p, q, r, s);
          if (std::abs(v - two_body(q, p, r, s)) > tol || std::abs(v - two_body(p, q, s, r)) > tol ||
              std::abs(v - two_body(r, s, p, q)) > tol)
            throw std::invalid_argument(fmt::format("g lacks 8-fold symmetry at ({},{}|{},{})", p, q, r, s));
        }
}

ParseError::ParseError(std::size_t line, const std::string& msg)
    : std::runtime_error(fmt::format("FCIDUMP line {}: {}", line, msg)), line_(line) {}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_header_end(const std::string& line) {
  const std::string t = upper(trim(line));
  return t == "/" || t.find("&END") != std::string::npos || t.find("$END") != std::string::npos;
}

std::optional<long> header_int(const std::string& header, const char* key) {
  const std::regex re(std::string(R"((^|[^A-Z0-9_]))") + key + R"(\s*=\s*([-+]?\d+))");
  std::smatch m;
  if (!std::regex_search(header, m, re)) return std::nullopt;
  return std::stol(m[2].str());
}

double parse_value(std::string tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '(') throw ParseError(line, "complex integrals are not supported");
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, fmt::format("non-numeric token '{}'", tok));
  }
  if (used != tok.size()) throw ParseError(line, fmt::format("non-numeric token '{}'", tok));
  return v;
}

long parse_index(const std::string& tok, std::size_t line, long norb) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, fmt::format("non-numeric index '{}'", tok));
  }
  if (used != tok.size()) throw ParseError(line, fmt::format("non-numeric index '{}'", tok));
  if (v < 0 || v > norb) throw ParseError(line, fmt::format("index {} outside [0, {}]", v, norb));
  return v;
}

}  // namespace

MolecularHamiltonian parse_fcidump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (header.empty() && trim(line).empty()) continue;
    if (header.empty() && upper(trim(line)).rfind("&FCI", 0) != 0)
      throw ParseError(line_no, "expected '&FCI' header");
    header += upper(line) + "\n";
    if (is_header_end(line)) {
      header_done = true;
      break;
    }
  }
  if (!header_done) throw ParseError(line_no, "unterminated header (missing &END)");

  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  const auto ms2 = header_int(header, "MS2");
  if (!norb || !nelec || !ms2) throw ParseError(line_no, "header must define NORB, NELEC and MS2");
  if (*norb < 0 || *nelec < 0 || *nelec > 2 * *norb)
    throw ParseError(line_no, fmt::format("inconsistent header NORB={} NELEC={}", *norb, *nelec));
  if ((*nelec + *ms2) % 2 != 0 || std::abs(*ms2) > *nelec)
    throw ParseError(line_no, fmt::format("MS2={} inconsistent with NELEC={}", *ms2, *nelec));

  MolecularHamiltonian m(static_cast<std::size_t>(*norb), static_cast<std::size_t>(*nelec),
                         static_cast<int>(*ms2));
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 5)
      throw ParseError(line_no, fmt::format("expected 'value i j k l', got {} tokens", toks.size()));
    const double v = parse_value(toks[0], line_no);
    long idx[4];
    for (int k = 0; k < 4; ++k) idx[k] = parse_index(toks[k + 1], line_no, *norb);
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      m.e_nuc = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      m.set_two_body_symmetric(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      m.one_body(i - 1, j - 1) = v;
      m.one_body(j - 1, i - 1) = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy record; not part of the Hamiltonian
    } else {
      throw ParseError(line_no, fmt::format("invalid index pattern {} {} {} {}", i, j, k, l));
    }
  }
  return m;
}

MolecularHamiltonian parse_fcidump(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fcidump(in);
}

MolecularHamiltonian load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open FCIDUMP '{}'", path));
  return parse_fcidump(in);
}

void write_fcidump(std::ostream& out, const MolecularHamiltonian& m) {
  const std::size_t n = m.n_spatial;
  out << fmt::format(" &FCI NORB={},NELEC={},MS2={},\n &END\n", n, m.n_electrons, m.ms2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const double v = m.two_body(p, q, r, s);
          if (v != 0.0) out << fmt::format("{:.17g} {} {} {} {}\n", v, p + 1, q + 1, r + 1, s + 1);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      if (m.one_body(p, q) != 0.0) out << fmt::format("{:.17g} {} {} 0 0\n", m.one_body(p, q), p + 1, q + 1);
  out << fmt::format("{:.17g} 0 0 0 0\n", m.e_nuc);
}

SpinOrbitalHamiltonian to_spin_orbitals(const MolecularHamiltonian& m) {
  SpinOrbitalHamiltonian so;
  const std::size_t n = 2 * m.n_spatial;
  so.n_so = n;
  so.e_nuc = m.e_nuc;
  so.h.assign(n * n, 0.0);
  so.g.assign(n * n * n * n, 0.0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p % 2 == q % 2) so.h[p * n + q] = m.one_body(p / 2, q / 2);

  // <PQ|RS> = (PR|QS) with spin deltas on (P,R) and (Q,S)
  auto phys = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    if (p % 2 != r % 2 || q % 2 != s % 2) return 0.0;
    return m.two_body(p / 2, r / 2, q / 2, s / 2);
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          so.g[((p * n + q) * n + r) * n + s] = phys(p, q, r, s) - phys(p, q, s, r);
  return so;
}

double determinant_energy(const MolecularHamiltonian& m, const std::vector<std::size_t>& occ) {
  double e = m.e_nuc;
  for (std::size_t a : occ) e += m.one_body(a / 2, a / 2);
  for (std::size_t a : occ)
    for (std::size_t b : occ) {
      if (a == b) continue;
      const std::size_t i = a / 2, j = b / 2;
      double v = m.two_body(i, i, j, j);
      if (a % 2 == b % 2) v -= m.two_body(i, j, j, i);
      e += 0.5 * v;
    }
  return e;
}

double determinant_energy(const SpinOrbitalHamiltonian& so, const std::vector<std::size_t>& occ) {
  double e = so.e_nuc;
  for (std::size_t a : occ) e += so.one_body(a, a);
  for (std::size_t a : occ)
    for (std::size_t b : occ) e += 0.5 * so.two_body(a, b, a, b);
  return e;
}

std::vector<std::size_t> hf_occupation(std::size_t n_so, std::size_t n_electrons, int ms2) {
  const long ne = static_cast<long>(n_electrons);
  if (n_electrons > n_so || (ne + ms2) % 2 != 0 || std::abs(ms2) > ne)
    throw std::invalid_argument(
        fmt::format("inconsistent occupation n_so={} n_electrons={} ms2={}", n_so, n_electrons, ms2));
  const std::size_t na = static_cast<std::size_t>((ne + ms2) / 2);
  const std::size_t nb = static_cast<std::size_t>((ne - ms2) / 2);
  if (na > (n_so + 1) / 2 || nb > n_so / 2)
    throw std::invalid_argument("not enough spin orbitals of one spin for ms2");
  std::vector<std::size_t> occ;
  for (std::size_t k = 0; k < na; ++k) occ.push_back(2 * k);
  for (std::size_t k = 0; k < nb; ++k) occ.push_back(2 * k + 1);
  std::sort(occ.begin(), occ.end());
  return occ;
}

}  // namespace avqe
