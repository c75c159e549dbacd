#include "isbt/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "isbt/rng.hpp"
#include "json.hpp"

namespace isbt {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(std::move(tok));
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

}  // namespace

int EdgeList::label_id(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

void EdgeList::validate() const {
  if (static_cast<int>(labels.size()) != num_nodes && !labels.empty())
    throw DataError("edge list: label table size does not match node count");
  for (const auto& [s, r] : edges) {
    if (s < 0 || s >= num_nodes || r < 0 || r >= num_nodes)
      throw DataError("edge list: node id out of range");
  }
}

std::size_t NodeCorpus::total_tokens() const {
  std::size_t n = 0;
  for (const auto& d : docs) n += d.size();
  return n;
}

void NodeCorpus::validate(int num_nodes) const {
  if (static_cast<int>(docs.size()) != num_nodes)
    throw DataError("corpus: document count does not match node count");
  const int W = num_words();
  for (const auto& d : docs) {
    for (int w : d) {
      if (w < 0 || w >= W) throw DataError("corpus: token id out of range");
    }
  }
}

EdgeList load_edge_list(std::istream& in) {
  EdgeList out;
  std::unordered_map<std::string, int> ids;
  std::string line;
  std::size_t lineno = 0;
  bool saw_any = false;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<int>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw DataError("edge list line " + std::to_string(lineno) + ": expected 2 fields, got " +
                      std::to_string(fields.size()));
    out.edges.emplace_back(intern(fields[0]), intern(fields[1]));
    saw_any = true;
  }
  if (!saw_any) throw DataError("edge list: empty input");
  out.num_nodes = static_cast<int>(out.labels.size());
  return out;
}

EdgeList load_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return load_edge_list(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
  for (const auto& [s, r] : edges.edges) {
    out << edges.labels[s] << '\t' << edges.labels[r] << '\n';
  }
}

void write_edge_list_file(const std::string& path, const EdgeList& edges) {
  auto out = open_output(path);
  write_edge_list(out, edges);
  if (!out) throw IoError("write failed: " + path);
}

NodeCorpus load_node_documents(std::istream& in, const EdgeList& edges) {
  NodeCorpus corpus = NodeCorpus::empty(edges.num_nodes);
  std::unordered_map<std::string, int> node_ids;
  for (std::size_t i = 0; i < edges.labels.size(); ++i)
    node_ids.emplace(edges.labels[i], static_cast<int>(i));
  std::unordered_map<std::string, int> word_ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const std::string label = tab == std::string::npos ? line : line.substr(0, tab);
    if (label.empty())
      throw DataError("documents line " + std::to_string(lineno) + ": empty node label");
    auto it = node_ids.find(label);
    if (it == node_ids.end())
      throw DataError("documents line " + std::to_string(lineno) + ": unknown node " + label);
    auto& doc = corpus.docs[it->second];
    if (tab != std::string::npos) {
      for (auto& tok : split_ws(line.substr(tab + 1))) {
        auto [wit, inserted] = word_ids.emplace(tok, static_cast<int>(corpus.vocab.size()));
        if (inserted) corpus.vocab.push_back(tok);
        doc.push_back(wit->second);
      }
    }
  }
  return corpus;
}

NodeCorpus load_node_documents_file(const std::string& path, const EdgeList& edges) {
  auto in = open_input(path);
  try {
    return load_node_documents(in, edges);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_node_documents(std::ostream& out, const NodeCorpus& corpus, const EdgeList& edges) {
  for (int i = 0; i < edges.num_nodes; ++i) {
    out << edges.labels[i];
    out << '\t';
    const auto& doc = corpus.docs[i];
    for (std::size_t t = 0; t < doc.size(); ++t) {
      if (t) out << ' ';
      out << corpus.vocab[doc[t]];
    }
    out << '\n';
  }
}

void write_node_documents_file(const std::string& path, const NodeCorpus& corpus,
                               const EdgeList& edges) {
  auto out = open_output(path);
  write_node_documents(out, corpus, edges);
  if (!out) throw IoError("write failed: " + path);
}

SplitPlan kfold_edges(const EdgeList& edges, int k, std::uint64_t seed) {
  const std::size_t n = edges.num_links();
  if (k < 2) throw DataError("kfold_edges: k must be >= 2");
  if (static_cast<std::size_t>(k) > n)
    throw DataError("kfold_edges: k exceeds the number of links");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(substream_seed(seed, "splits.kfold"));
  rng.shuffle(idx);
  SplitPlan plan;
  plan.seed = seed;
  plan.edge_folds.assign(k, {});
  for (std::size_t i = 0; i < n; ++i) plan.edge_folds[i % k].push_back(idx[i]);
  for (auto& fold : plan.edge_folds) std::sort(fold.begin(), fold.end());
  return plan;
}

SplitPlan word_holdout(const NodeCorpus& corpus, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw DataError("word_holdout: train_fraction must lie in (0, 1)");
  Rng rng(substream_seed(seed, "splits.words"));
  const std::size_t total = corpus.total_tokens();
  // Per nonempty document, protect one random position from ever landing in
  // the test set; everything else is a candidate.
  std::vector<std::pair<int, int>> candidates;
  for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
    const std::size_t ti = corpus.docs[i].size();
    if (ti == 0) continue;
    const std::size_t keep = rng.uniform_int(ti);
    for (std::size_t t = 0; t < ti; ++t) {
      if (t != keep) candidates.emplace_back(static_cast<int>(i), static_cast<int>(t));
    }
  }
  const auto target = static_cast<std::size_t>(
      std::llround((1.0 - train_fraction) * static_cast<double>(total)));
  const std::size_t take = std::min(target, candidates.size());
  rng.shuffle(candidates);
  SplitPlan plan;
  plan.seed = seed;
  plan.word_test.assign(candidates.begin(), candidates.begin() + take);
  std::sort(plan.word_test.begin(), plan.word_test.end());
  return plan;
}

std::string SplitPlan::to_json() const {
  nlohmann::json j;
  j["edge_folds"] = edge_folds;
  auto& wt = j["word_test"] = nlohmann::json::array();
  for (const auto& [node, pos] : word_test) wt.push_back({node, pos});
  j["seed"] = seed;
  return j.dump(2);
}

SplitPlan SplitPlan::from_json(const std::string& text) {
  SplitPlan plan;
  try {
    auto j = nlohmann::json::parse(text);
    plan.edge_folds = j.value("edge_folds", std::vector<std::vector<std::size_t>>{});
    for (const auto& e : j.value("word_test", nlohmann::json::array()))
      plan.word_test.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    plan.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("split plan: bad JSON: ") + e.what());
  }
  return plan;
}

EdgeList edges_subset(const EdgeList& edges, const std::vector<std::size_t>& indices) {
  EdgeList out;
  out.num_nodes = edges.num_nodes;
  out.labels = edges.labels;
  out.edges.reserve(indices.size());
  for (std::size_t i : indices) out.edges.push_back(edges.edges.at(i));
  return out;
}

EdgeList edges_excluding(const EdgeList& edges, const std::vector<std::size_t>& indices) {
  std::vector<char> drop(edges.num_links(), 0);
  for (std::size_t i : indices) drop.at(i) = 1;
  EdgeList out;
  out.num_nodes = edges.num_nodes;
  out.labels = edges.labels;
  for (std::size_t i = 0; i < edges.num_links(); ++i) {
    if (!drop[i]) out.edges.push_back(edges.edges[i]);
  }
  return out;
}

NodeCorpus corpus_train_split(const NodeCorpus& corpus, const SplitPlan& plan) {
  std::vector<std::vector<char>> held(corpus.docs.size());
  for (std::size_t i = 0; i < corpus.docs.size(); ++i)
    held[i].assign(corpus.docs[i].size(), 0);
  for (const auto& [node, pos] : plan.word_test) held.at(node).at(pos) = 1;
  NodeCorpus out;
  out.vocab = corpus.vocab;
  out.docs.resize(corpus.docs.size());
  for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
    for (std::size_t t = 0; t < corpus.docs[i].size(); ++t) {
      if (!held[i][t]) out.docs[i].push_back(corpus.docs[i][t]);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> corpus_test_words(const NodeCorpus& corpus,
                                                   const SplitPlan& plan) {
  std::vector<std::pair<int, int>> out;
  out.reserve(plan.word_test.size());
  for (const auto& [node, pos] : plan.word_test)
    out.emplace_back(node, corpus.docs.at(node).at(pos));
  return out;
}

}  // namespace isbt
