#include "twisth/representation.hpp"

#include <sstream>

#include "twisth/lattice.hpp"

namespace twisth {

IntMatrix invert_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NotUnimodularError("matrix is not square");
  }
  Int d = m.det();
  if (d != 1 && d != -1) {
    throw NotUnimodularError("determinant is " + d.str() + ", not +-1");
  }
  // Row-reduce [m | I]; the HNF of a unimodular matrix is I, so the
  // transform is the inverse.
  HnfResult r = hnf(m);
  if (!r.h.is_identity()) {
    throw std::logic_error("HNF of unimodular matrix is not the identity");
  }
  return r.u;
}

Representation::Representation(std::size_t dimension,
                               std::vector<std::string> basis_labels,
                               std::vector<IntMatrix> images)
    : dim_(dimension), labels_(std::move(basis_labels)),
      images_(std::move(images)) {
  if (dim_ == 0) {
    throw std::invalid_argument("zero-dimensional module rejected");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      labels_.push_back("x" + std::to_string(i + 1));
    }
  }
  if (labels_.size() != dim_) {
    throw std::invalid_argument("basis label count does not match dimension");
  }
  inverses_.reserve(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const IntMatrix& m = images_[j];
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument("image " + std::to_string(j) +
                                  " has wrong dimensions");
    }
    inverses_.push_back(invert_matrix(m));
  }
}

Representation Representation::trivial(std::size_t num_generators) {
  std::vector<IntMatrix> images(num_generators, IntMatrix::identity(1));
  return Representation(1, {"m"}, std::move(images));
}

IntMatrix Representation::evaluate(const Word& w) const {
  IntMatrix out = IntMatrix::identity(dim_);
  for (const Letter& l : w.letters()) {
    out = out * (l.sign > 0 ? image(static_cast<std::size_t>(l.gen))
                            : image_inverse(static_cast<std::size_t>(l.gen)));
  }
  return out;
}

RelationReport check_relations(const Presentation& pres,
                               const Representation& rep) {
  RelationReport report;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const Relation& r = pres.relations[i];
    IntMatrix diff = rep.evaluate(r.lhs) - rep.evaluate(r.rhs);
    bool pass = diff.is_zero();
    report.checks.push_back({i, r.label, pass, std::move(diff)});
  }
  return report;
}

bool check_identity_under_rep(const Representation& rep, const Word& w1,
                              const Word& w2) {
  return rep.evaluate(w1) == rep.evaluate(w2);
}

namespace {

std::string strip_comment(const std::string& line) {
  std::size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool is_blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Representation parse_representation(const std::string& text,
                                    const Presentation& pres) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<IntMatrix> images(pres.num_generators());
  std::vector<bool> seen(pres.num_generators(), false);

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = strip_comment(raw);
      if (is_blank(line)) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string line;
  while (next_content_line(line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "dimension:") {
      long n = -1;
      if (!(ls >> n) || n <= 0) {
        throw ParseError(lineno, 1, "dimension must be a positive integer");
      }
      dim = static_cast<std::size_t>(n);
    } else if (key == "basis:") {
      if (dim == 0) {
        throw ParseError(lineno, 1, "basis line before dimension line");
      }
      std::string l;
      while (ls >> l) labels.push_back(l);
      if (labels.size() != dim) {
        throw ParseError(lineno, 1, "basis label count does not match "
                                    "dimension");
      }
    } else if (key == "matrix") {
      if (dim == 0) {
        throw ParseError(lineno, 1, "matrix block before dimension line");
      }
      std::string name;
      ls >> name;
      if (name.empty() || name.back() != ':') {
        throw ParseError(lineno, 1, "expected 'matrix NAME:'");
      }
      name.pop_back();
      int gen = pres.generator_index(name);
      if (gen < 0) {
        throw ParseError(lineno, 1, "matrix for generator '" + name +
                                        "' not in presentation");
      }
      if (seen[static_cast<std::size_t>(gen)]) {
        throw ParseError(lineno, 1, "duplicate matrix for '" + name + "'");
      }
      IntMatrix m(dim, dim);
      for (std::size_t r = 0; r < dim; ++r) {
        std::string mrow;
        if (!next_content_line(mrow)) {
          throw ParseError(lineno, 1, "unexpected end of file in matrix '" +
                                          name + "'");
        }
        std::istringstream rs(mrow);
        for (std::size_t c = 0; c < dim; ++c) {
          std::string tok;
          if (!(rs >> tok)) {
            throw ParseError(lineno, 1, "matrix row too short");
          }
          try {
            m.at(r, c) = Int(tok);
          } catch (const std::exception&) {
            throw ParseError(lineno, 1, "bad integer '" + tok + "'");
          }
        }
        std::string extra;
        if (rs >> extra) {
          throw ParseError(lineno, 1, "matrix row too long");
        }
      }
      images[static_cast<std::size_t>(gen)] = std::move(m);
      seen[static_cast<std::size_t>(gen)] = true;
    } else {
      throw ParseError(lineno, 1, "malformed line '" + key + "'");
    }
  }
  if (dim == 0) throw ParseError(lineno == 0 ? 1 : lineno, 1,
                                 "missing dimension line");
  for (std::size_t j = 0; j < pres.num_generators(); ++j) {
    if (!seen[j]) {
      throw ParseError(lineno, 1, "missing matrix for generator '" +
                                      pres.generators[j].name + "'");
    }
  }
  return Representation(dim, std::move(labels), std::move(images));
}

}  // namespace twisth
