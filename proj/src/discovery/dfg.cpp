#include "xel/discovery.hpp"

namespace xel {

Dfg dfg(const TraceLog& traces) {
  Dfg graph;
  for (const auto& trace : traces.traces) {
    if (trace.labels.empty()) continue;
    for (const auto& label : trace.labels) ++graph.nodes[label];
    for (std::size_t k = 1; k < trace.labels.size(); ++k)
      ++graph.edges[{trace.labels[k - 1], trace.labels[k]}];
    ++graph.start_labels[trace.labels.front()];
    ++graph.end_labels[trace.labels.back()];
  }
  if (graph.nodes.empty())
    throw DiscoveryError("EMPTY_LOG", "trace log contains no events");
  return graph;
}

}  // namespace xel
