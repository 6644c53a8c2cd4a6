#include "gsk/burnside.hpp"

#include <sstream>

namespace gsk {

namespace {

void require_same(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch("Burnside elements over different groups");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Burnside arithmetic overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Burnside arithmetic overflow");
  return r;
}

}  // namespace

BurnsideElement::BurnsideElement(GroupPtr group, std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (!group_) throw InvalidArgument("Burnside element without a group");
  if (coords_.size() != group_->lattice().class_count())
    throw InvalidArgument("Burnside element needs one coordinate per subgroup class");
}

BurnsideElement BurnsideElement::zero(GroupPtr group) {
  const auto n = group->lattice().class_count();
  return BurnsideElement(std::move(group), std::vector<std::int64_t>(n, 0));
}

BurnsideElement BurnsideElement::one(GroupPtr group) {
  const int last = static_cast<int>(group->lattice().class_count()) - 1;
  return basis(std::move(group), last);
}

BurnsideElement BurnsideElement::basis(GroupPtr group, int class_index) {
  auto z = zero(std::move(group));
  if (class_index < 0 || static_cast<std::size_t>(class_index) >= z.coords_.size())
    throw InvalidArgument("class index out of range");
  z.coords_[class_index] = 1;
  return z;
}

bool BurnsideElement::is_zero() const {
  for (auto c : coords_)
    if (c) return false;
  return true;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& b) {
  require_same(*this, b);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], b.coords_[i]);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& b) { return *this += -b; }

BurnsideElement operator-(BurnsideElement a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

BurnsideElement operator*(std::int64_t k, BurnsideElement a) {
  for (auto& c : a.coords_) c = checked_mul(k, c);
  return a;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) { return mul(a, b); }

TableOfMarks table_of_marks(const GroupPtr& G) { return {G, G->lattice().marks}; }

BurnsideElement burnside_class(const GSet& X) {
  auto a = BurnsideElement::zero(X.group());
  std::vector<std::int64_t> c(a.coords().size(), 0);
  for (int cls : iso_type(X).classes) ++c[cls];
  return BurnsideElement(X.group(), std::move(c));
}

std::vector<std::int64_t> marks(const BurnsideElement& a) {
  const auto& M = a.group()->lattice().marks;
  const std::size_t k = M.rows();
  std::vector<std::int64_t> v(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j <= i; ++j) v[j] = checked_add(v[j], checked_mul(a[i], M(i, j)));
  }
  return v;
}

BurnsideElement from_marks(const GroupPtr& G, std::span<const std::int64_t> ghost) {
  const auto& M = G->lattice().marks;
  const std::size_t k = M.rows();
  if (ghost.size() != k) throw InvalidArgument("ghost vector needs one entry per subgroup class");
  // ghost_j = sum_{i >= j} a_i M(i, j); solve from the top class down.
  std::vector<std::int64_t> a(k, 0);
  for (std::size_t jj = k; jj-- > 0;) {
    std::int64_t rest = ghost[jj];
    for (std::size_t i = jj + 1; i < k; ++i) rest = checked_add(rest, -checked_mul(a[i], M(i, jj)));
    const std::int64_t d = M(jj, jj);
    if (rest % d != 0) {
      std::ostringstream os;
      os << "coefficient of class " << jj << " would be " << rest << "/" << d;
      throw NotInImage(os.str());
    }
    a[jj] = rest / d;
  }
  return BurnsideElement(G, std::move(a));
}

BurnsideElement add(const BurnsideElement& a, const BurnsideElement& b) { return a + b; }

BurnsideElement mul(const BurnsideElement& a, const BurnsideElement& b) {
  require_same(a, b);
  auto ma = marks(a);
  auto mb = marks(b);
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = checked_mul(ma[i], mb[i]);
  try {
    return from_marks(a.group(), ma);
  } catch (const NotInImage& e) {
    throw Error(std::string("internal: product of Burnside classes left the image: ") + e.what());
  }
}

std::string to_orbit_string(const BurnsideElement& a) {
  const auto& names = a.group()->lattice().names;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coords().size(); i-- > 0;) {
    std::int64_t c = a[i];
    if (!c) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) os << m;
    os << "[G/" << names[i] << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

std::string to_marks_string(const BurnsideElement& a) {
  std::ostringstream os;
  os << "marks: (";
  auto v = marks(a);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace gsk
