/*
   Copyright 2026 The skewpois authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewpois/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewpois {

namespace {

std::string render_word(const std::vector<int>& word,
                        const std::vector<std::string>& gen_names) {
  if (word.empty()) return "e";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!first) os << "*";
    os << gen_names[word[i]];
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

// Projector onto the lambda-eigenspace of g, averaging over the cyclic
// group generated by g.
Mat eigen_projector(const Mat& g, int order, const Cyclo& lambda) {
  int n = g.rows();
  Mat sum(n, n);
  Mat power = Mat::identity(n);
  for (int j = 0; j < order; ++j) {
    sum = sum + power.scaled(lambda.pow(-j));
    power = power * g;
  }
  return sum.scaled(Cyclo(Rat(1, order)));
}

int pivot_row(const Mat& m, int col) {
  for (int i = 0; i < m.rows(); ++i)
    if (!m.at(i, col).is_zero()) return i;
  return m.rows();
}

// Splits the span of block into eigenspaces of g, in eigenvalue order
// zeta^0, zeta^1, ... Each returned column carries its eigenvalue.
std::vector<std::pair<std::vector<Cyclo>, Cyclo>> split_block(
    const Mat& g, int order, const Mat& block) {
  std::vector<std::pair<std::vector<Cyclo>, Cyclo>> out;
  int n = g.rows();
  int found = 0;
  for (int k = 0; k < order && found < block.cols(); ++k) {
    Cyclo lambda = Cyclo::zeta(order, k);
    Mat proj = eigen_projector(g, order, lambda) * block;
    Mat basis = column_reduced(proj);
    for (int c = 0; c < basis.cols(); ++c) {
      std::vector<Cyclo> col(n);
      for (int i = 0; i < n; ++i) col[i] = basis.at(i, c);
      out.emplace_back(std::move(col), lambda);
      ++found;
    }
  }
  if (found != block.cols())
    throw std::logic_error("split_block: eigenspaces do not fill the block");
  return out;
}

}  // namespace

int Group::find(const Mat& m) const {
  for (int i = 0; i < size(); ++i)
    if (mats_[i] == m) return i;
  return -1;
}

Group Group::build(const std::vector<Mat>& generators,
                   std::vector<std::string> names, int size_limit) {
  if (generators.empty())
    throw std::invalid_argument("build: at least one generator required");
  Group g;
  g.dim_ = generators[0].rows();
  for (const auto& m : generators) {
    if (m.rows() != m.cols() || m.rows() != g.dim_)
      throw std::invalid_argument("build: generators must be square and of equal size");
    if (m.det().is_zero())
      throw std::invalid_argument("build: generator matrix is singular");
  }
  std::vector<std::string> gen_names = std::move(names);
  for (size_t i = gen_names.size(); i < generators.size(); ++i)
    gen_names.push_back(std::string(1, static_cast<char>('a' + i)));
  if (gen_names.size() != generators.size())
    throw std::invalid_argument("build: one name per generator expected");

  g.mats_.push_back(Mat::identity(g.dim_));
  std::vector<std::vector<int>> words{{}};
  for (size_t start = 0; start < g.mats_.size(); ++start) {
    for (size_t j = 0; j < generators.size(); ++j) {
      Mat prod = g.mats_[start] * generators[j];
      if (g.find(prod) >= 0) continue;
      if (static_cast<int>(g.mats_.size()) >= size_limit)
        throw std::invalid_argument(
            "build: group size limit exceeded (is a generator of infinite order?)");
      g.mats_.push_back(std::move(prod));
      std::vector<int> w = words[start];
      w.push_back(static_cast<int>(j));
      words.push_back(std::move(w));
    }
  }

  const int n = g.size();
  for (int i = 0; i < n; ++i) g.names_.push_back(render_word(words[i], gen_names));
  for (size_t j = 0; j < generators.size(); ++j)
    g.generator_index_.emplace_back(gen_names[j], g.find(generators[j]));

  g.table_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int idx = g.find(g.mats_[a] * g.mats_[b]);
      if (idx < 0) throw std::logic_error("build: closure is not closed");
      g.table_[a][b] = idx;
    }

  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) g.inv_[a] = b;

  g.order_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int ord = 1;
    int cur = a;
    while (cur != 0) {
      cur = g.table_[cur][a];
      ++ord;
    }
    g.order_[a] = ord;
  }
  g.exponent_ = 1;
  for (int a = 0; a < n; ++a) g.exponent_ = std::lcm(g.exponent_, g.order_[a]);

  g.abelian_ = true;
  for (int a = 0; a < n && g.abelian_; ++a)
    for (int b = a + 1; b < n && g.abelian_; ++b)
      if (g.table_[a][b] != g.table_[b][a]) g.abelian_ = false;

  std::vector<int> cls(n, -1);
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    int id = static_cast<int>(g.classes_.size());
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      int conj = g.table_[g.table_[h][a]][g.inv_[h]];
      if (cls[conj] < 0) {
        cls[conj] = id;
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    g.classes_.push_back(std::move(members));
  }

  g.centralizers_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h)
      if (g.table_[a][h] == g.table_[h][a]) g.centralizers_[a].push_back(h);

  // Frames. Abelian: refine one simultaneous eigenframe over the
  // generators (every block stays invariant because the group commutes),
  // then order columns by pivot row so diagonal actions keep the standard
  // basis. Otherwise: a per-element eigenframe, fixed columns first.
  if (g.abelian_) {
    std::vector<std::pair<std::vector<Cyclo>, Cyclo>> cols;
    std::vector<Mat> blocks{Mat::identity(g.dim_)};
    for (const auto& [gname, gidx] : g.generator_index_) {
      (void)gname;
      std::vector<Mat> next;
      for (const auto& block : blocks) {
        for (auto& [vec, lambda] : split_block(g.mats_[gidx], g.order_[gidx], block)) {
          (void)lambda;
          Mat single(g.dim_, 1);
          for (int i = 0; i < g.dim_; ++i) single.at(i, 0) = vec[i];
          next.push_back(std::move(single));
        }
      }
      // Merge adjacent columns with equal eigenvalue back into blocks for
      // the next refinement round; keeping singles is also correct, just
      // slower, so stay with singles for simplicity.
      blocks = std::move(next);
    }
    Mat frame(g.dim_, g.dim_);
    {
      std::vector<int> order_idx(blocks.size());
      std::iota(order_idx.begin(), order_idx.end(), 0);
      std::stable_sort(order_idx.begin(), order_idx.end(), [&](int x, int y) {
        return pivot_row(blocks[x], 0) < pivot_row(blocks[y], 0);
      });
      if (static_cast<int>(blocks.size()) != g.dim_)
        throw std::logic_error("build: eigenframe does not span");
      for (int c = 0; c < g.dim_; ++c)
        for (int i = 0; i < g.dim_; ++i)
          frame.at(i, c) = blocks[order_idx[c]].at(i, 0);
    }
    Mat frame_inv = frame.inverse();
    for (int a = 0; a < n; ++a) {
      FixedPointData fd;
      fd.element = a;
      fd.frame = frame;
      fd.frame_inv = frame_inv;
      fd.det_normal = Cyclo(1);
      for (int c = 0; c < g.dim_; ++c) {
        std::vector<Cyclo> col(g.dim_);
        for (int i = 0; i < g.dim_; ++i) col[i] = frame.at(i, c);
        auto image = g.mats_[a].apply(col);
        int piv = 0;
        while (col[piv].is_zero()) ++piv;
        Cyclo lambda = image[piv] / col[piv];
        for (int i = 0; i < g.dim_; ++i)
          if (image[i] != lambda * col[i])
            throw std::logic_error("build: frame column is not an eigenvector");
        fd.eigs.push_back(lambda);
        if (lambda == Cyclo(1)) {
          fd.fixed_idx.push_back(c);
        } else {
          fd.normal_idx.push_back(c);
          fd.det_normal *= lambda;
        }
      }
      fd.codim = static_cast<int>(fd.normal_idx.size());
      g.fixed_.push_back(std::move(fd));
    }
  } else {
    for (int a = 0; a < n; ++a) {
      auto cols = split_block(g.mats_[a], g.order_[a], Mat::identity(g.dim_));
      // Fixed columns (eigenvalue 1) come first by the eigenvalue scan
      // order inside split_block.
      FixedPointData fd;
      fd.element = a;
      fd.frame = Mat(g.dim_, g.dim_);
      fd.det_normal = Cyclo(1);
      for (int c = 0; c < g.dim_; ++c) {
        for (int i = 0; i < g.dim_; ++i) fd.frame.at(i, c) = cols[c].first[i];
        fd.eigs.push_back(cols[c].second);
        if (cols[c].second == Cyclo(1)) {
          fd.fixed_idx.push_back(c);
        } else {
          fd.normal_idx.push_back(c);
          fd.det_normal *= cols[c].second;
        }
      }
      fd.codim = static_cast<int>(fd.normal_idx.size());
      fd.frame_inv = fd.frame.inverse();
      g.fixed_.push_back(std::move(fd));
    }
  }
  return g;
}

std::vector<int> Group::codim2_set() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (fixed_[a].codim == 2) out.push_back(a);
  return out;
}

bool Group::is_reduced() const {
  for (int a = 0; a < size(); ++a)
    if (a != identity() && fixed_[a].codim == 0) return false;
  return true;
}

int Group::element_named(const std::string& word) const {
  std::string compact;
  for (char c : word)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty())
    throw std::invalid_argument("element_named: empty word");
  if (compact == "e") return identity();
  int result = identity();
  size_t pos = 0;
  while (pos < compact.size()) {
    size_t star = compact.find('*', pos);
    std::string factor = compact.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? compact.size() : star + 1;
    long power = 1;
    size_t caret = factor.find('^');
    std::string base = factor;
    if (caret != std::string::npos) {
      base = factor.substr(0, caret);
      try {
        power = std::stol(factor.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("element_named: bad exponent in '" + factor + "'");
      }
    }
    int gen = -1;
    for (const auto& [gname, gidx] : generator_index_)
      if (gname == base) gen = gidx;
    if (gen < 0)
      throw std::invalid_argument("element_named: unknown generator '" + base + "'");
    int factor_elt = identity();
    int step = power >= 0 ? gen : inv_[gen];
    for (long k = 0; k < std::abs(power); ++k) factor_elt = mul(factor_elt, step);
    result = mul(result, factor_elt);
  }
  return result;
}

}  // namespace skewpois
