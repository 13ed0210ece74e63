#include "riley/qypoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace riley {

QYPoly QYPoly::constant(BigInt c) {
  QYPoly p;
  if (c != 0) p.terms_[{0, 0}] = std::move(c);
  return p;
}

QYPoly QYPoly::monomial(int qexp, int yexp, BigInt c) {
  if (qexp < 0 || yexp < 0) {
    throw std::invalid_argument("QYPoly::monomial: negative exponent");
  }
  QYPoly p;
  if (c != 0) p.terms_[{qexp, yexp}] = std::move(c);
  return p;
}

int QYPoly::y_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.y);
  return d;
}

int QYPoly::q_degree() const {
  if (terms_.empty()) return -1;
  // Keys are ordered by (q, y); the last key has the largest q.
  return terms_.rbegin()->first.q;
}

BigInt QYPoly::coeff(int qexp, int yexp) const {
  auto it = terms_.find({qexp, yexp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

QYPoly QYPoly::y_leading_coeff() const {
  const int d = y_degree();
  QYPoly out;
  if (d < 0) return out;
  for (const auto& [key, c] : terms_) {
    if (key.y == d) out.terms_[{key.q, 0}] = c;
  }
  return out;
}

void QYPoly::add_term(const Key& key, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

QYPoly& QYPoly::operator+=(const QYPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

QYPoly& QYPoly::operator-=(const QYPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

QYPoly QYPoly::operator-() const {
  QYPoly out;
  for (const auto& [key, c] : terms_) out.terms_[key] = -c;
  return out;
}

QYPoly operator*(const QYPoly& a, const QYPoly& b) {
  QYPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.q + kb.q, ka.y + kb.y}, ca * cb);
    }
  }
  return out;
}

QYPoly operator*(const BigInt& c, const QYPoly& p) {
  QYPoly out;
  if (c == 0) return out;
  for (const auto& [key, v] : p.terms_) out.terms_[key] = c * v;
  return out;
}

std::string QYPoly::to_json_string() const {
  std::vector<const TermMap::value_type*> rows;
  rows.reserve(terms_.size());
  for (const auto& t : terms_) rows.push_back(&t);
  std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    if (a->first.y != b->first.y) return a->first.y > b->first.y;
    return a->first.q > b->first.q;
  });
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto* row : rows) {
    if (!first) os << ',';
    first = false;
    os << '[' << row->first.q << ',' << row->first.y << ",\""
       << row->second.str() << "\"]";
  }
  os << ']';
  return os.str();
}

QYPoly QYPoly::from_json_string(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) {
    throw std::invalid_argument("QYPoly::from_json_string: expected an array");
  }
  QYPoly out;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != 3) {
      throw std::invalid_argument(
          "QYPoly::from_json_string: expected [i, j, coeff] triples");
    }
    const int qexp = row[0].get<int>();
    const int yexp = row[1].get<int>();
    const BigInt c(row[2].get<std::string>());
    if (qexp < 0 || yexp < 0) {
      throw std::invalid_argument("QYPoly::from_json_string: negative exponent");
    }
    out.add_term({qexp, yexp}, c);
  }
  return out;
}

}  // namespace riley
