#include "liecert/cartan_model.hpp"

#include <cctype>
#include <sstream>

namespace liecert {

void SimpleType::validate() const {
  int min_rank = 0, max_rank = 1 << 20;
  switch (family) {
    case Family::A: min_rank = 1; break;
    case Family::B: min_rank = 2; break;
    case Family::C: min_rank = 3; break;
    case Family::D: min_rank = 4; break;
    case Family::E: min_rank = 6; max_rank = 8; break;
    case Family::F: min_rank = 4; max_rank = 4; break;
    case Family::G: min_rank = 2; max_rank = 2; break;
  }
  if (rank < min_rank || rank > max_rank)
    throw Error(ErrorCode::UnsupportedRank, name() + " is outside the supported range");
}

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
    throw Error(ErrorCode::UsageError, "bad type '" + s + "' (expected e.g. D5)");
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(ErrorCode::UsageError, "bad type '" + s + "' (expected e.g. D5)");
  int r = 0;
  try {
    r = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, "bad rank in '" + s + "'");
  }
  SimpleType t{static_cast<Family>(s[0]), r};
  t.validate();
  return t;
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanModel::CartanModel(std::string tag, int ambient_dim, int sum_zero_from,
                         std::vector<Rat> form_diag)
    : tag_(std::move(tag)), ambient_dim_(ambient_dim), sum_zero_from_(sum_zero_from),
      form_diag_(std::move(form_diag)) {
  if (static_cast<int>(form_diag_.size()) != ambient_dim_)
    throw Error(ErrorCode::Internal, "form size mismatch");
}

ModelPtr CartanModel::for_type(SimpleType t) {
  t.validate();
  int n = t.rank;
  auto ones = [](int k) { return std::vector<Rat>(k, Rat(1)); };
  switch (t.family) {
    case Family::A:
      return std::make_shared<CartanModel>("sum-zero hyperplane in R^" + std::to_string(n + 1),
                                           n + 1, 0, ones(n + 1));
    case Family::B:
    case Family::C:
      return std::make_shared<CartanModel>("R^" + std::to_string(n), n, -1, ones(n));
    case Family::D:
      return std::make_shared<CartanModel>("R^" + std::to_string(n), n, -1, ones(n));
    case Family::E:
      if (n == 6) {
        std::vector<Rat> form = ones(7);
        form[0] = make_rat(1, 2);
        return std::make_shared<CartanModel>(
            "eps-structured: (n, xi) = n*eps + xi, xi sum-zero in R^6, <eps,eps> = 1/2", 7, 1,
            std::move(form));
      }
      if (n == 7)
        return std::make_shared<CartanModel>("sum-zero hyperplane in R^8", 8, 0, ones(8));
      return std::make_shared<CartanModel>("sum-zero hyperplane in R^9", 9, 0, ones(9));
    case Family::F:
      return std::make_shared<CartanModel>("R^4", 4, -1, ones(4));
    case Family::G:
      return std::make_shared<CartanModel>("sum-zero hyperplane in R^3", 3, 0, ones(3));
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

bool CartanModel::admits(const std::vector<Rat>& coords) const {
  if (static_cast<int>(coords.size()) != ambient_dim_) return false;
  if (sum_zero_from_ >= 0) {
    Rat s = 0;
    for (int i = sum_zero_from_; i < ambient_dim_; ++i) s += coords[i];
    if (s != 0) return false;
  }
  return true;
}

bool CartanModel::compatible(const CartanModel& o) const {
  return ambient_dim_ == o.ambient_dim_ && sum_zero_from_ == o.sum_zero_from_ &&
         form_diag_ == o.form_diag_;
}

Vec::Vec(ModelPtr m, std::vector<Rat> coords) : model(std::move(m)), c(std::move(coords)) {
  if (!model) throw Error(ErrorCode::Internal, "vector without a model");
  if (!model->admits(c))
    throw Error(ErrorCode::Internal, "coordinates do not lie in model " + model->tag());
}

Vec Vec::zero(const ModelPtr& m) { return Vec(m, std::vector<Rat>(m->ambient_dim(), Rat(0))); }

bool Vec::is_zero() const {
  for (const Rat& x : c)
    if (x != 0) return false;
  return true;
}

namespace {
void check_same_model(const Vec& a, const Vec& b) {
  if (!a.model || !b.model || !a.model->compatible(*b.model))
    throw Error(ErrorCode::Internal, "mixing vectors from incompatible models");
}
}  // namespace

Vec Vec::operator+(const Vec& o) const {
  check_same_model(*this, o);
  std::vector<Rat> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] + o.c[i];
  return Vec(model, std::move(r));
}

Vec Vec::operator-(const Vec& o) const {
  check_same_model(*this, o);
  std::vector<Rat> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] - o.c[i];
  return Vec(model, std::move(r));
}

Vec Vec::operator-() const {
  std::vector<Rat> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
  return Vec(model, std::move(r));
}

Vec Vec::operator*(const Rat& s) const {
  std::vector<Rat> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * s;
  return Vec(model, std::move(r));
}

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.c.size() && i < b.c.size(); ++i) {
    int s = cmp(a.c[i], b.c[i]);
    if (s != 0) return s < 0;
  }
  return a.c.size() < b.c.size();
}

Rat pair(const Vec& a, const Vec& b) {
  check_same_model(a, b);
  Rat acc = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (a.c[i] == 0 || b.c[i] == 0) continue;
    acc += a.model->form_entry(i) * a.c[i] * b.c[i];
  }
  return acc;
}

Rat norm_sq(const Vec& a) { return pair(a, a); }

std::string coord_str(const Vec& v) {
  std::ostringstream os;
  bool eps = v.model && v.model->has_epsilon_axis();
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) os << (eps && i == 1 ? ";" : ",");
    os << rat_str(v.c[i]);
  }
  return os.str();
}

std::vector<Vec> space_basis(const ModelPtr& m) {
  std::vector<Vec> out;
  int k = m->ambient_dim();
  auto unit = [&](int i, int j, bool diff) {
    std::vector<Rat> c(k, Rat(0));
    c[i] = 1;
    if (diff) c[j] = -1;
    return Vec(m, std::move(c));
  };
  if (!m->sum_zero()) {
    for (int i = 0; i < k; ++i) out.push_back(unit(i, 0, false));
    return out;
  }
  int s = m->sum_zero_from();
  for (int i = 0; i < s; ++i) out.push_back(unit(i, 0, false));
  for (int i = s; i + 1 < k; ++i) out.push_back(unit(i, i + 1, true));
  return out;
}

}  // namespace liecert
