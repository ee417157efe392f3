#include "twisth/homology.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <sstream>

namespace twisth {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int mod_positive(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

TensorBasis tensor_basis(const Presentation& pres, const Representation& rep) {
  return TensorBasis{pres.num_generators(), rep.dimension()};
}

std::string symbol_label(const Presentation& pres, const Representation& rep,
                         std::size_t flat) {
  TensorBasis tb = tensor_basis(pres, rep);
  return pres.generators.at(tb.gen_of(flat)).name + "⊗" +
         rep.basis_labels().at(tb.basis_of(flat));
}

std::string combination_label(const Presentation& pres,
                              const Representation& rep,
                              const std::vector<Int>& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Int c = v[i];
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) os << c << ' ';
    os << symbol_label(pres, rep, i);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

IntMatrix boundary1_matrix(const Presentation& pres,
                           const Representation& rep) {
  std::size_t n = rep.dimension();
  std::size_t ng = pres.num_generators();
  IntMatrix d1(n, ng * n);
  for (std::size_t j = 0; j < ng; ++j) {
    IntMatrix block = rep.image_inverse(j) - IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < n; ++r) {
        d1.at(r, j * n + i) = block.at(r, i);
      }
    }
  }
  return d1;
}

std::vector<Int> fox_vector(const Presentation& pres, const Representation& rep,
                            const Relation& r, std::size_t basis_index) {
  std::size_t n = rep.dimension();
  std::vector<Int> coords(pres.num_generators() * n, Int(0));

  auto accumulate = [&](const Word& side, int overall_sign) {
    std::vector<Int> xi(n, Int(0));
    xi[basis_index] = 1;
    // m = psi(prefix)^-1 * xi, updated letter by letter.
    std::vector<Int> m = xi;
    for (const Letter& l : side.letters()) {
      std::size_t g = static_cast<std::size_t>(l.gen);
      std::vector<Int> contrib =
          l.sign > 0 ? m : rep.image(g).apply(m);
      int s = overall_sign * l.sign;
      for (std::size_t i = 0; i < n; ++i) {
        if (s > 0) {
          coords[g * n + i] += contrib[i];
        } else {
          coords[g * n + i] -= contrib[i];
        }
      }
      // Extend the prefix: psi(p x^s)^-1 = psi(x)^-s psi(p)^-1.
      m = l.sign > 0 ? rep.image_inverse(g).apply(m)
                     : rep.image(g).apply(m);
    }
  };
  accumulate(r.lhs, +1);
  accumulate(r.rhs, -1);
  return coords;
}

bool HomologyResult::ClassCoords::is_zero() const {
  for (const Int& x : torsion) {
    if (x != 0) return false;
  }
  for (const Int& x : free) {
    if (x != 0) return false;
  }
  return true;
}

Int HomologyResult::ClassCoords::order(const std::vector<Int>& factors) const {
  for (const Int& x : free) {
    if (x != 0) return 0;
  }
  Int ord = 1;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] == 0) continue;
    Int o = factors[i] / gcd_int(torsion[i], factors[i]);
    ord = ord / gcd_int(ord, o) * o;
  }
  return ord;
}

HomologyResult::ClassCoords HomologyResult::project(
    const std::vector<Int>& kernel_coords) const {
  std::vector<Int> z = relation_snf.u.apply(kernel_coords);
  ClassCoords out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Int d = i < relation_snf.d.size() ? relation_snf.d[i] : Int(0);
    if (d == 1) continue;
    if (d == 0) {
      out.free.push_back(z[i]);
    } else {
      out.torsion.push_back(mod_positive(z[i], d));
    }
  }
  return out;
}

HomologyResult h1(const Presentation& pres, const Representation& rep) {
  RelationReport report = check_relations(pres, rep);
  for (const RelationCheck& c : report.checks) {
    if (!c.pass) {
      throw RelationInconsistencyError(
          "relation " + pres.relation_label(c.index) +
          " does not hold under the representation");
    }
  }

  HomologyResult out;
  out.boundary = boundary1_matrix(pres, rep);
  out.kernel_basis = kernel_lattice(out.boundary);

  std::size_t n = rep.dimension();
  std::vector<std::vector<Int>> fox;
  fox.reserve(pres.relations.size() * n);
  for (const Relation& r : pres.relations) {
    for (std::size_t i = 0; i < n; ++i) {
      fox.push_back(fox_vector(pres, rep, r, i));
    }
  }
  QuotientResult q = quotient_in_sublattice(out.kernel_basis, fox);
  out.group = std::move(q.group);
  out.relation_coords = std::move(q.coords);
  out.relation_snf = std::move(q.coord_snf);
  return out;
}

AbelianGroup h0(const Presentation& pres, const Representation& rep) {
  return cokernel(boundary1_matrix(pres, rep));
}

IntMatrix exponent_sum_matrix(const Presentation& pres) {
  IntMatrix m(pres.num_generators(), pres.relations.size());
  for (std::size_t k = 0; k < pres.relations.size(); ++k) {
    const Relation& r = pres.relations[k];
    for (const Letter& l : r.lhs.letters()) {
      m.at(static_cast<std::size_t>(l.gen), k) += l.sign;
    }
    for (const Letter& l : r.rhs.letters()) {
      m.at(static_cast<std::size_t>(l.gen), k) -= l.sign;
    }
  }
  return m;
}

AbelianGroup abelianization(const Presentation& pres) {
  return cokernel(exponent_sum_matrix(pres));
}

HomologyResult::ClassCoords class_of(const HomologyResult& result,
                                     const Presentation& pres,
                                     const Representation& rep,
                                     const std::vector<Int>& v) {
  std::vector<Int> b = result.boundary.apply(v);
  bool in_kernel = true;
  for (const Int& x : b) {
    if (x != 0) in_kernel = false;
  }
  if (!in_kernel) {
    std::ostringstream os;
    os << "not a homology class: boundary is";
    bool first = true;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) continue;
      os << (first ? " " : " + ");
      if (b[i] != 1) os << b[i] << ' ';
      os << rep.basis_labels()[i];
      first = false;
    }
    throw NotInKernelError(os.str(), b);
  }
  auto coords = solve_integer(result.kernel_basis, v);
  if (!coords) {
    throw MembershipError("kernel vector outside the kernel lattice");
  }
  return result.project(*coords);
}

std::vector<Int> parse_class_expr(const std::string& text,
                                  const Presentation& pres,
                                  const Representation& rep) {
  TensorBasis tb = tensor_basis(pres, rep);
  std::vector<Int> v(tb.size(), Int(0));
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(1, pos + 1, msg);
  };

  skip_ws();
  if (pos >= text.size()) fail("empty expression");
  bool first = true;
  while (pos < text.size()) {
    int sign = +1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : +1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    skip_ws();
    Int coeff = 1;
    if (pos < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      coeff = Int(text.substr(start, pos - start));
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size() ||
        !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      fail("expected generator name");
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    std::string name = text.substr(start, pos - start);
    int gen = pres.generator_index(name);
    if (gen < 0) fail("unknown generator '" + name + "'");
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    skip_ws();
    std::size_t istart = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == istart) fail("expected basis index");
    long idx = std::stol(text.substr(istart, pos - istart));
    if (idx < 1 || static_cast<std::size_t>(idx) > rep.dimension()) {
      fail("basis index out of range (1.." +
           std::to_string(rep.dimension()) + ")");
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
    ++pos;
    std::size_t flat = tb.index(static_cast<std::size_t>(gen),
                                static_cast<std::size_t>(idx - 1));
    v[flat] += sign > 0 ? coeff : -coeff;
    first = false;
    skip_ws();
  }
  return v;
}

}  // namespace twisth
