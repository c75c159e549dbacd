#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isbt/errors.hpp"

namespace isbt {

// Directed edge list over dense node ids. Duplicates are permitted and the
// order is preserved: the observation is the list itself, not an adjacency
// structure.
struct EdgeList {
  std::vector<std::pair<int, int>> edges;  // (sender, receiver)
  int num_nodes = 0;                       // M
  std::vector<std::string> labels;         // id -> original label

  std::size_t num_links() const { return edges.size(); }
  int label_id(const std::string& label) const;  // -1 when unknown
  void validate() const;
};

// Per-node token sequences over a shared vocabulary. A node may have an
// empty document.
struct NodeCorpus {
  std::vector<std::vector<int>> docs;  // per node id, token ids
  std::vector<std::string> vocab;      // token id -> word

  int num_words() const { return static_cast<int>(vocab.size()); }
  std::size_t total_tokens() const;
  void validate(int num_nodes) const;

  static NodeCorpus empty(int num_nodes) {
    NodeCorpus c;
    c.docs.assign(num_nodes, {});
    return c;
  }
};

// Index-based train/test layout: k disjoint edge folds plus a word holdout
// given as (node, position) pairs.
struct SplitPlan {
  std::vector<std::vector<std::size_t>> edge_folds;
  std::vector<std::pair<int, int>> word_test;  // (node, position)
  std::uint64_t seed = 0;

  std::string to_json() const;
  static SplitPlan from_json(const std::string& text);
};

// Parses "sender<ws>receiver" lines; labels map to dense ids in
// first-appearance order. Throws DataError with a line number on malformed
// input and on empty input.
EdgeList load_edge_list(std::istream& in);
EdgeList load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const EdgeList& edges);
void write_edge_list_file(const std::string& path, const EdgeList& edges);

// Parses "node-label<TAB>token token ..." lines. Node labels must resolve
// against the edge list; nodes absent from the file get empty documents.
// The vocabulary is built in first-appearance order.
NodeCorpus load_node_documents(std::istream& in, const EdgeList& edges);
NodeCorpus load_node_documents_file(const std::string& path, const EdgeList& edges);
void write_node_documents(std::ostream& out, const NodeCorpus& corpus, const EdgeList& edges);
void write_node_documents_file(const std::string& path, const NodeCorpus& corpus,
                               const EdgeList& edges);

// Deterministic k-fold split of edge indices; fold sizes differ by at most
// one. Requires 2 <= k <= number of links.
SplitPlan kfold_edges(const EdgeList& edges, int k, std::uint64_t seed);

// Holds out roughly (1 - train_fraction) of tokens, never taking the last
// training token of a nonempty document. When the constraint makes the
// target unreachable the closest achievable split is returned.
SplitPlan word_holdout(const NodeCorpus& corpus, double train_fraction, std::uint64_t seed);

// Convenience: edges restricted to / excluding an index set (M and labels kept).
EdgeList edges_subset(const EdgeList& edges, const std::vector<std::size_t>& indices);
EdgeList edges_excluding(const EdgeList& edges, const std::vector<std::size_t>& indices);

// Corpus with the word_test positions of `plan` removed / kept.
NodeCorpus corpus_train_split(const NodeCorpus& corpus, const SplitPlan& plan);
// Held-out (node, word-id) pairs in plan order.
std::vector<std::pair<int, int>> corpus_test_words(const NodeCorpus& corpus,
                                                   const SplitPlan& plan);

}  // namespace isbt
