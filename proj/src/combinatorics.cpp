#include "curvemult/combinatorics.hpp"

#include <cctype>

#include "curvemult/errors.hpp"

namespace curvemult {

namespace {

[[noreturn]] void invalid_charseq(const std::string& why) {
  throw InvalidInput("invalid-characteristic", "invalid characteristic sequence: " + why);
}

[[noreturn]] void invalid_multiplicities(const std::string& why) {
  throw InvalidInput("invalid-multiplicity-sequence", "invalid multiplicity sequence: " + why);
}

}  // namespace

CharacteristicSequence::CharacteristicSequence(Integer n, std::vector<Integer> m)
    : n_(std::move(n)), m_(std::move(m)) {
  if (n_ < 1) invalid_charseq("n must be positive");
  if (m_.empty()) invalid_charseq("g must be at least 1");
  if (m_.front() <= n_) invalid_charseq("n < m_1 is required (no tangency to the y-axis)");
  d_.push_back(n_);
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i > 0 && m_[i] <= m_[i - 1]) invalid_charseq("exponents must increase strictly");
    Integer next = gcd(d_.back(), m_[i]);
    if (next == d_.back()) invalid_charseq("m_" + std::to_string(i + 1) + " does not drop the gcd");
    d_.push_back(next);
  }
  if (d_.back() != 1) invalid_charseq("d_g must be 1");
}

CharacteristicSequence CharacteristicSequence::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  if (!cleaned.empty() && cleaned.front() == '(') cleaned.erase(0, 1);
  if (!cleaned.empty() && cleaned.back() == ')') cleaned.pop_back();
  const auto semi = cleaned.find(';');
  if (semi == std::string::npos) throw ParseError("characteristic sequence must look like (n;m1,...,mg)");
  auto to_int = [](const std::string& s) {
    if (s.empty()) throw ParseError("empty entry in characteristic sequence");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("non-integer entry '" + s + "' in characteristic sequence");
    return Integer(s);
  };
  Integer n = to_int(cleaned.substr(0, semi));
  std::vector<Integer> m;
  std::string rest = cleaned.substr(semi + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    m.push_back(to_int(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return CharacteristicSequence(std::move(n), std::move(m));
}

std::string CharacteristicSequence::to_string() const {
  std::string s = "(" + n_.get_str() + ";";
  for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + m_[i].get_str();
  return s + ")";
}

std::size_t EuclideanChain::length() const {
  Integer total = 0;
  for (const auto& st : stages)
    for (const auto& h : st.quotients) total += h;
  return to_size(total);
}

EuclideanChain euclid_chain(const CharacteristicSequence& cs) {
  EuclideanChain chain;
  for (std::size_t i = 1; i <= cs.genus(); ++i) {
    EuclideanStage st;
    st.dividend = i == 1 ? cs.m(1) : Integer(cs.m(i) - cs.m(i - 1));
    st.divisor = cs.d(i - 1);
    Integer a = st.dividend, b = st.divisor;
    while (b != 0) {
      Integer q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      st.quotients.push_back(q);
      if (r != 0) st.remainders.push_back(r);
      a = b;
      b = r;
    }
    chain.stages.push_back(std::move(st));
  }
  return chain;
}

MultiplicitySequence multiplicity_sequence(const EuclideanChain& chain) {
  MultiplicitySequence ms;
  auto emit = [&ms](const Integer& value, const Integer& count) {
    for (std::size_t c = 0, e = to_size(count); c < e; ++c) ms.values.push_back(value);
  };
  for (const auto& st : chain.stages) {
    emit(st.divisor, st.quotients[0]);
    for (std::size_t j = 0; j < st.remainders.size(); ++j) emit(st.remainders[j], st.quotients[j + 1]);
  }
  return ms;
}

CharacteristicSequence characteristic_from_multiplicities(const MultiplicitySequence& ms) {
  // Run-length blocks of equal values.
  std::vector<std::pair<Integer, Integer>> blocks;
  for (const auto& v : ms.values) {
    if (v < 1) invalid_multiplicities("entries must be positive");
    if (!blocks.empty() && blocks.back().first == v) {
      blocks.back().second += 1;
    } else {
      if (!blocks.empty() && v > blocks.back().first) invalid_multiplicities("must be non-increasing");
      blocks.emplace_back(v, 1);
    }
  }
  if (blocks.size() < 2) invalid_multiplicities("a singular branch needs at least two distinct values");

  const Integer n = blocks[0].first;
  std::vector<Integer> m;
  Integer divisor = n;              // d_{i-1}
  Integer leading = blocks[0].second;  // h_{i,0}
  Integer previous_m = 0;
  std::size_t idx = 1;
  while (true) {
    if (idx >= blocks.size()) invalid_multiplicities("missing remainder block");
    Integer prev = divisor, cur = blocks[idx].first;
    if (cur >= prev) invalid_multiplicities("remainders must decrease");
    m.push_back(previous_m + leading * divisor + cur);
    previous_m = m.back();
    while (true) {
      Integer q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());
      const Integer& count = blocks[idx].second;
      if (r != 0) {
        if (count != q || idx + 1 >= blocks.size() || blocks[idx + 1].first != r)
          invalid_multiplicities("block " + std::to_string(idx + 1) + " violates the Euclidean chain");
        prev = cur;
        cur = r;
        ++idx;
        continue;
      }
      if (idx + 1 == blocks.size()) {
        if (cur != 1 || count != q) invalid_multiplicities("final block must be 1 repeated h times");
        try {
          CharacteristicSequence cs(n, std::move(m));
          if (multiplicity_sequence(euclid_chain(cs)) != ms) invalid_multiplicities("reassembly mismatch");
          return cs;
        } catch (const InvalidInput& e) {
          if (e.id() == "invalid-multiplicity-sequence") throw;
          invalid_multiplicities(e.what());
        }
      }
      if (cur == 1 || count < q) invalid_multiplicities("block " + std::to_string(idx + 1) + " too short");
      leading = count - q;
      divisor = cur;
      ++idx;
      break;
    }
  }
}

ResolutionIndices resolution_indices(const EuclideanChain& chain) {
  ResolutionIndices idx;
  idx.gamma.push_back(0);
  for (const auto& st : chain.stages) {
    Integer sum = 0;
    for (const auto& h : st.quotients) sum += h;
    idx.tau.push_back(idx.gamma.back() + to_size(st.quotients[0]) + 1);
    idx.gamma.push_back(idx.gamma.back() + to_size(sum));
  }
  return idx;
}

SemigroupConstants semigroup_constants(const CharacteristicSequence& cs,
                                       const MultiplicitySequence& ms,
                                       const ResolutionIndices& idx) {
  SemigroupConstants sc;
  for (std::size_t l = 1; l <= cs.genus(); ++l) {
    Integer e = 0;
    for (std::size_t i = 1; i <= idx.gamma[l]; ++i) e += ms[i] * ms[i];
    sc.E.push_back(e);
    Integer b;
    mpz_divexact(b.get_mpz_t(), e.get_mpz_t(), cs.d(l - 1).get_mpz_t());
    sc.B.push_back(b);
  }
  return sc;
}

std::pair<Integer, Integer> bezout_lift(const Integer& a, const Integer& b, const Integer& u) {
  if (a < 1 || b < 1 || u < 1) throw InvalidInput("out-of-range", "bezout_lift needs positive a, b, u");
  if (a > b) throw InvalidInput("out-of-range", "bezout_lift needs a <= b");
  if (gcd(a, b) != 1) throw InvalidInput("not-coprime", "bezout_lift needs gcd(a, b) = 1");
  // t = u * b^{-1} mod a, taken in [1, a]; then s = (ab + u - tb) / a >= u/a > 0.
  Integer t = 1;
  if (a > 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    Integer prod = u * inv;
    mpz_fdiv_r(t.get_mpz_t(), prod.get_mpz_t(), a.get_mpz_t());
    if (t == 0) t = a;
  }
  Integer s;
  Integer rhs = a * b + u - t * b;
  mpz_divexact(s.get_mpz_t(), rhs.get_mpz_t(), a.get_mpz_t());
  return {s, t};
}

}  // namespace curvemult
