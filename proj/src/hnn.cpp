#include "relfree/hnn.hpp"

#include <cstdlib>

#include "relfree/checked.hpp"
#include "relfree/errors.hpp"

namespace relfree {

HnnWord hnn_from_f2(std::span<const Letter> w) {
  HnnWord h;
  for (Letter x : w) {
    if (std::abs(x) == 2) {
      h.base.back() = checked_add(h.base.back(), x > 0 ? 1 : -1);
    } else if (std::abs(x) == 1) {
      h.stable.push_back(x > 0 ? 1 : -1);
      h.base.push_back(0);
    } else {
      throw PreconditionError("hnn_from_f2: letter outside F_2");
    }
  }
  return h;
}

HnnWord britton_reduce(const HnnWord& h, const Backend& base, const Element& a, std::int64_t m) {
  if (base.rank() != 1) throw PreconditionError("britton_reduce: base must be infinite cyclic");
  if (base.is_identity(a) || m == 0) throw PreconditionError("britton_reduce: degenerate associated subgroups");
  if (h.base.size() != h.stable.size() + 1) throw PreconditionError("britton_reduce: malformed word");
  const std::int64_t q = base.kind() == BackendKind::FreeAbelian
                             ? a.data[0]
                             : (a.data[0] > 0 ? 1 : -1) * static_cast<std::int64_t>(a.data.size());
  const std::int64_t qm = checked_mul(q, m);

  HnnWord out;
  for (std::size_t i = 0; i < h.base.size(); ++i) {
    out.base.back() = checked_add(out.base.back(), h.base[i]);
    if (i == h.stable.size()) break;
    const int e = h.stable[i];
    if (!out.stable.empty() && out.stable.back() == -e) {
      const std::int64_t x = out.base.back();
      bool pinch = false;
      std::int64_t replaced = 0;
      if (e == 1 && x % q == 0) {
        // s^-1 (a^j) s = a^{jm}
        replaced = checked_mul(x / q, qm);
        pinch = true;
      } else if (e == -1 && x % qm == 0) {
        // s (a^{jm}) s^-1 = a^j
        replaced = checked_mul(x / qm, q);
        pinch = true;
      }
      if (pinch) {
        out.base.pop_back();
        out.stable.pop_back();
        out.base.back() = checked_add(out.base.back(), replaced);
        continue;
      }
    }
    out.stable.push_back(e);
    out.base.push_back(0);
  }
  return out;
}

Mat2Q Mat2Q::operator*(const Mat2Q& r) const {
  Mat2Q p;
  p.e[0] = e[0] * r.e[0] + e[1] * r.e[2];
  p.e[1] = e[0] * r.e[1] + e[1] * r.e[3];
  p.e[2] = e[2] * r.e[0] + e[3] * r.e[2];
  p.e[3] = e[2] * r.e[1] + e[3] * r.e[3];
  return p;
}

Mat2Q Mat2Q::inverse() const {
  mpq_class det = e[0] * e[3] - e[1] * e[2];
  if (det == 0) throw std::domain_error("Mat2Q: singular matrix");
  Mat2Q inv;
  inv.e[0] = e[3] / det;
  inv.e[1] = -e[1] / det;
  inv.e[2] = -e[2] / det;
  inv.e[3] = e[0] / det;
  return inv;
}

Mat2Q bs12_generator(Letter x) {
  Mat2Q m;
  switch (x) {
    case 1: m.e = {mpq_class(1, 2), 0, 0, 1}; break;
    case -1: m.e = {2, 0, 0, 1}; break;
    case 2: m.e = {1, 1, 0, 1}; break;
    case -2: m.e = {1, -1, 0, 1}; break;
    default: throw PreconditionError("bs12_matrix: letter outside F_2");
  }
  return m;
}

Mat2Q bs12_matrix(std::span<const Letter> w) {
  Mat2Q acc;
  for (Letter x : w) acc = acc * bs12_generator(x);
  return acc;
}

}  // namespace relfree
