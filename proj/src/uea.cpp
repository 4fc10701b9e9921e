#include "lieq/uea.hpp"

#include <algorithm>
#include <cstdlib>

namespace lieq {

Element Element::scalar(const Scalar& s) { return word({}, s); }

Element Element::generator(std::size_t index, const Scalar& coeff) { return word({index}, coeff); }

Element Element::word(Word w, const Scalar& coeff) {
  Element e;
  e.add(w, coeff);
  return e;
}

Element Element::from(const Combination& c) {
  Element e;
  for (const auto& [g, coeff] : c.terms()) e.add({g}, coeff);
  return e;
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

bool Element::is_ordered() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return std::is_sorted(kv.first.begin(), kv.first.end()); });
}

void Element::add(const Word& w, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

Element operator*(const Scalar& s, const Element& e) {
  Element out;
  if (s.is_zero()) return out;
  for (const auto& [w, c] : e.terms_) out.add(w, s * c);
  return out;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

std::size_t default_term_cap() {
  constexpr std::size_t kDefault = 1'000'000;
  const char* env = std::getenv("LIEQ_TERM_CAP");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::size_t>(v);
}

namespace {

class Normalizer {
 public:
  Normalizer(const LieAlgebra& algebra, std::size_t cap) : algebra_(algebra), cap_(cap) {}

  const Element& word(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    auto descent = std::adjacent_find(w.begin(), w.end(), [](std::size_t x, std::size_t y) { return x > y; });
    Element result;
    if (descent == w.end()) {
      result = Element::word(w);
    } else {
      auto p = static_cast<std::size_t>(descent - w.begin());
      Word swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      result = word(swapped);
      // b*a = a*b + [b,a]
      const Combination ba = algebra_.bracket(w[p], w[p + 1]);
      for (const auto& [d, c] : ba.terms()) {
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        shorter.push_back(d);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
        result += c * word(shorter);
      }
    }
    if (result.size() > cap_ || memo_.size() > cap_) throw TermCapExceeded(cap_);
    return memo_.emplace(w, std::move(result)).first->second;
  }

 private:
  const LieAlgebra& algebra_;
  std::size_t cap_;
  std::map<Word, Element, WordLess> memo_;
};

}  // namespace

Element normal_form(const LieAlgebra& algebra, const Element& e, std::size_t term_cap) {
  for (const auto& [w, c] : e.terms()) {
    for (std::size_t g : w) {
      if (g >= algebra.dimension()) throw Error("element references a generator outside " + algebra.name());
    }
  }
  if (e.is_ordered()) return e;
  Normalizer normalizer(algebra, term_cap);
  Element out;
  for (const auto& [w, c] : e.terms()) {
    out += c * normalizer.word(w);
    if (out.size() > term_cap) throw TermCapExceeded(term_cap);
  }
  return out;
}

Element product(const LieAlgebra& algebra, const Element& a, const Element& b) {
  return normal_form(algebra, a * b);
}

Element commutator(const LieAlgebra& algebra, const Element& a, const Element& b) {
  return normal_form(algebra, a * b - b * a);
}

CasimirCheck is_casimir(const LieAlgebra& algebra, const Element& e) {
  Element nf = normal_form(algebra, e);
  for (std::size_t g = 0; g < algebra.dimension(); ++g) {
    Element residue = commutator(algebra, nf, Element::generator(g));
    if (!residue.is_zero()) return {false, g, std::move(residue)};
  }
  return {};
}

Substitution Substitution::formal_values(const LieAlgebra& algebra, const std::map<std::string, Scalar>& values) {
  Substitution s;
  s.formal = true;
  for (const auto& [name, value] : values) s.replacements[algebra.index_of(name)] = Element::scalar(value);
  return s;
}

Element substitute(const LieAlgebra& algebra, const Element& e, const Substitution& s) {
  if (s.replacements.empty()) return normal_form(algebra, e);
  if (!s.formal) {
    for (const auto& [g, value] : s.replacements) {
      if (!algebra.is_central(g)) {
        throw Error("substitution of non-central generator " + algebra.generator_name(g) +
                    " must be flagged formal");
      }
    }
  }
  Element nf = normal_form(algebra, e);
  Element out;
  for (const auto& [w, c] : nf.terms()) {
    Element term = Element::scalar(c);
    for (std::size_t g : w) {
      auto it = s.replacements.find(g);
      term = term * (it == s.replacements.end() ? Element::generator(g) : it->second);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return normal_form(algebra, out);
}

Element map_coefficients(const Element& e, const std::function<Scalar(const Scalar&)>& f) {
  Element out;
  for (const auto& [w, c] : e.terms()) out.add(w, f(c));
  return out;
}

Element substitute_symbols(const Element& e, const std::map<std::string, Scalar>& values) {
  return map_coefficients(e, [&](const Scalar& c) {
    Scalar r = c;
    for (const auto& [name, value] : values) r = r.substitute(name, value);
    return r;
  });
}

Element transfer(const Element& e, const LieAlgebra& from, const LieAlgebra& to,
                 const std::map<std::string, std::string>& renaming) {
  auto image = [&](std::size_t g) {
    const std::string& name = from.generator_name(g);
    auto it = renaming.find(name);
    return to.index_of(it == renaming.end() ? name : it->second);
  };
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word mapped;
    mapped.reserve(w.size());
    for (std::size_t g : w) mapped.push_back(image(g));
    out.add(mapped, c);
  }
  return normal_form(to, out);
}

Element linear_substitute(const Element& e, const Matrix& images, const LieAlgebra& target) {
  std::vector<Element> letter(images.size());
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].size() != target.dimension()) throw Error("substitution matrix does not match " + target.name());
    for (std::size_t j = 0; j < target.dimension(); ++j) letter[g] += Element::generator(j, images[g][j]);
  }
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element term = Element::scalar(c);
    for (std::size_t g : w) term = term * letter.at(g);
    out += term;
  }
  return normal_form(target, out);
}

Element symmetrize(const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word perm = w;
    std::sort(perm.begin(), perm.end());
    std::vector<Word> arrangements;
    do {
      arrangements.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Scalar weight = c * Scalar(Rational(1, static_cast<long>(arrangements.size())));
    for (const auto& a : arrangements) out.add(a, weight);
  }
  return out;
}

std::string to_string(const LieAlgebra& algebra, const Element& e) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [w, c] : e.terms()) {
    std::string body;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t run = 1;
      while (i + run < w.size() && w[i + run] == w[i]) ++run;
      if (!body.empty()) body += "*";
      body += algebra.generator_name(w[i]);
      if (run > 1) body += "^" + std::to_string(run);
      i += run;
    }
    terms.emplace_back(c, body);
  }
  return format_sum(terms);
}

}  // namespace lieq
