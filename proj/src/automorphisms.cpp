#include "subset_currents/automorphisms.hpp"

#include <algorithm>
#include <cctype>

#include "subset_currents/currents.hpp"
#include "subset_currents/subtrees.hpp"

namespace subset_currents {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim_view(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_index(std::string_view s, std::string_view token) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("bad Nielsen move '" + std::string(token) + "'");
  }
  return std::stoi(std::string(s));
}

NielsenMove parse_move(std::string_view token, int rank) {
  if (token.empty()) throw std::invalid_argument("empty Nielsen move");
  NielsenMove m;
  switch (std::toupper(static_cast<unsigned char>(token.front()))) {
    case 'L': m.kind = NielsenMove::Kind::Left; break;
    case 'R': m.kind = NielsenMove::Kind::Right; break;
    case 'I': m.kind = NielsenMove::Kind::Invert; break;
    case 'P': m.kind = NielsenMove::Kind::Swap; break;
    default: throw std::invalid_argument("unknown Nielsen move '" + std::string(token) + "'");
  }
  std::string_view rest = token.substr(1);
  if (m.kind == NielsenMove::Kind::Invert) {
    m.i = parse_index(rest, token);
    m.j = 0;
  } else if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    m.i = parse_index(rest.substr(0, colon), token);
    std::string_view js = rest.substr(colon + 1);
    bool neg = !js.empty() && js.front() == '-';
    m.j = parse_index(neg ? js.substr(1) : js, token) * (neg ? -1 : 1);
  } else if (auto dash = rest.find('-'); dash != std::string_view::npos) {
    m.i = parse_index(rest.substr(0, dash), token);
    m.j = -parse_index(rest.substr(dash + 1), token);
  } else if (rest.size() == 2) {
    m.i = parse_index(rest.substr(0, 1), token);
    m.j = parse_index(rest.substr(1, 1), token);
  } else {
    throw std::invalid_argument("ambiguous Nielsen move '" + std::string(token) + "'; use L<i>:<j>");
  }
  const bool pair = m.kind != NielsenMove::Kind::Invert;
  if (m.i < 1 || m.i > rank || (pair && (m.j == 0 || std::abs(m.j) > rank || std::abs(m.j) == m.i)) ||
      (m.kind == NielsenMove::Kind::Swap && m.j < 0)) {
    throw std::invalid_argument("Nielsen move '" + std::string(token) + "' out of range for rank " +
                                std::to_string(rank));
  }
  return m;
}

void apply_move(std::vector<Word>& t, const NielsenMove& m) {
  auto factor = [&](int j) { return j > 0 ? t[j - 1] : t[-j - 1].inverse(); };
  Word& xi = t[m.i - 1];
  switch (m.kind) {
    case NielsenMove::Kind::Left: xi = factor(m.j) * xi; break;
    case NielsenMove::Kind::Right: xi = xi * factor(m.j); break;
    case NielsenMove::Kind::Invert: xi = xi.inverse(); break;
    case NielsenMove::Kind::Swap: std::swap(xi, t[m.j - 1]); break;
  }
}

std::string word_text(const Word& w) {
  if (w.rank() <= kMaxCompactRank) return w.empty() ? "1" : to_compact(w);
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

}  // namespace

NielsenMove NielsenMove::inverse() const {
  NielsenMove m = *this;
  if (kind == Kind::Left || kind == Kind::Right) m.j = -j;
  return m;
}

std::string NielsenMove::to_string() const {
  const char c = kind == Kind::Left ? 'L' : kind == Kind::Right ? 'R' : kind == Kind::Invert ? 'I' : 'P';
  std::string out(1, c);
  out += std::to_string(i);
  if (kind != Kind::Invert) out += ":" + std::to_string(j);
  return out;
}

bool validate(const std::vector<Word>& images) {
  if (images.empty()) return false;
  const int rank = images.front().rank();
  if (static_cast<int>(images.size()) != rank) return false;
  try {
    return Subgroup::from_generators(images, rank).index() == 1;
  } catch (const TrivialSubgroupError&) {
    return false;
  }
}

Automorphism Automorphism::from_images(std::vector<Word> images) {
  if (!validate(images)) throw std::invalid_argument("images do not define an automorphism");
  return Automorphism(std::move(images), std::nullopt);
}

Automorphism Automorphism::from_nielsen(const std::vector<NielsenMove>& moves, int rank) {
  check_rank(rank);
  std::vector<Word> t;
  for (Letter x = 1; x <= rank; ++x) t.push_back(Word({x}, rank));
  for (const NielsenMove& m : moves) {
    const bool pair = m.kind != NielsenMove::Kind::Invert;
    if (m.i < 1 || m.i > rank || (pair && (m.j == 0 || std::abs(m.j) > rank || std::abs(m.j) == m.i))) {
      throw std::invalid_argument("Nielsen move out of range: " + m.to_string());
    }
    apply_move(t, m);
  }
  return Automorphism(std::move(t), moves);
}

Automorphism Automorphism::identity(int rank) { return from_nielsen({}, rank); }

Word Automorphism::apply(const Word& w) const {
  if (w.rank() != rank()) throw std::invalid_argument("word rank mismatch in automorphism");
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const Word& img = image(x);
    if (x > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      out.insert(out.end(), img.letters().rbegin(), img.letters().rend());
      std::for_each(out.end() - static_cast<long>(img.size()), out.end(), [](Letter& y) { y = -y; });
    }
  }
  return reduce(out, rank());
}

Subgroup Automorphism::apply(const Subgroup& h) const {
  std::vector<Word> gens;
  for (const Word& b : h.basis()) gens.push_back(apply(b));
  return Subgroup::from_generators(gens, rank());
}

Automorphism Automorphism::inverse() const {
  if (!moves_) throw std::logic_error("inverse requires a Nielsen decomposition");
  std::vector<NielsenMove> inv;
  for (auto it = moves_->rbegin(); it != moves_->rend(); ++it) inv.push_back(it->inverse());
  return from_nielsen(inv, rank());
}

std::string Automorphism::to_string() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out += "; ";
    out += word_text(Word({i + 1}, rank())) + "->" + word_text(images_[i]);
  }
  return out;
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<Word> images;
  for (const Word& w : psi.images()) images.push_back(phi.apply(w));
  if (phi.moves() && psi.moves()) {
    std::vector<NielsenMove> moves = *phi.moves();
    moves.insert(moves.end(), psi.moves()->begin(), psi.moves()->end());
    return Automorphism::from_nielsen(moves, phi.rank());
  }
  return Automorphism::from_images(std::move(images));
}

Automorphism inner(const Word& g) {
  std::vector<Word> images;
  for (Letter x = 1; x <= g.rank(); ++x) images.push_back(g.times(x) * g.inverse());
  return Automorphism::from_images(std::move(images));
}

Automorphism parse_automorphism(std::string_view text, int rank) {
  check_rank(rank);
  std::string_view s = trim_view(text);
  constexpr std::string_view kPrefix = "nielsen:";
  if (s.substr(0, kPrefix.size()) == kPrefix) {
    std::vector<NielsenMove> moves;
    std::string_view body = trim_view(s.substr(kPrefix.size()));
    if (!body.empty()) {
      for (std::string_view token : split(body, ',')) moves.push_back(parse_move(token, rank));
    }
    return Automorphism::from_nielsen(moves, rank);
  }
  std::vector<Word> images;
  std::vector<bool> seen(rank, false);
  for (Letter x = 1; x <= rank; ++x) images.push_back(Word({x}, rank));
  for (std::string_view clause : split(s, ';')) {
    if (clause.empty()) continue;
    auto arrow = clause.find("->");
    if (arrow == std::string_view::npos) {
      throw std::invalid_argument("expected 'x->word' in '" + std::string(clause) + "'");
    }
    std::string_view lhs = trim_view(clause.substr(0, arrow));
    std::string_view rhs = trim_view(clause.substr(arrow + 2));
    Word source = parse_word(lhs, rank);
    if (source.size() != 1 || source.front() < 0) {
      throw std::invalid_argument("left side must be a basis letter: '" + std::string(lhs) + "'");
    }
    const int i = source.front() - 1;
    if (seen[i]) throw std::invalid_argument("basis letter mapped twice: '" + std::string(lhs) + "'");
    seen[i] = true;
    images[i] = parse_word(rhs, rank);
  }
  return Automorphism::from_images(std::move(images));
}

InvarianceReport invariance_report(const Automorphism& phi, const Subgroup& h, int max_edges) {
  if (phi.rank() != h.ambient_rank()) throw std::invalid_argument("rank mismatch in invariance report");
  const Subgroup image = phi.apply(h);
  InvarianceReport r;
  r.rank_before = h.rank();
  r.rank_after = image.rank();
  r.index_before = h.index();
  r.index_after = image.index();
  const WeightSystem before = WeightSystem::counting(h);
  const WeightSystem after = WeightSystem::counting(image);
  r.rrk_before = reduced_rank(before);
  r.rrk_after = reduced_rank(after);
  r.full_group = r.index_before == 1;
  if (r.full_group) {
    for (const SubtreeK& k : enumerate_classes(h.ambient_rank(), max_edges)) {
      ++r.classes_compared;
      if (before.weight(k) != after.weight(k)) r.weights_equal = false;
    }
  }
  return r;
}

}  // namespace subset_currents
