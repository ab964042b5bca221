#include "refnet/network.hpp"

#include <stdexcept>
#include <string>

namespace refnet {

namespace {

constexpr std::uint32_t kMaxRefractory = 65535;

}  // namespace

std::uint32_t Network::min_p() const {
  std::uint32_t result = 1;
  for (NodeId i = 1; i <= node_count(); ++i) {
    result = (i == 1) ? p[i] : std::min(result, p[i]);
  }
  return result;
}

std::uint32_t Network::max_p() const {
  std::uint32_t result = 1;
  for (NodeId i = 1; i <= node_count(); ++i) {
    result = std::max(result, p[i]);
  }
  return result;
}

void Network::validate() const {
  const std::size_t want = std::size_t{node_count()} + 1;
  if (p.size() != want || th.size() != want) {
    throw std::invalid_argument("network: p/th length must be node count + 1");
  }
  for (NodeId i = 1; i <= node_count(); ++i) {
    if (p[i] < 1 || p[i] > kMaxRefractory) {
      throw std::invalid_argument("network: p_" + std::to_string(i) + " out of [1, " +
                                  std::to_string(kMaxRefractory) + "]");
    }
    if (th[i] < 1) {
      throw std::invalid_argument("network: th_" + std::to_string(i) + " must be >= 1");
    }
  }
}

bool is_valid_state(const Network& net, const State& s) {
  if (s.size() != std::size_t{net.node_count()} + 1) return false;
  for (NodeId i = 1; i <= net.node_count(); ++i) {
    if (s[i] > net.p[i]) return false;
  }
  return true;
}

void require_valid_state(const Network& net, const State& s) {
  if (!is_valid_state(net, s)) {
    throw std::invalid_argument("state invalid for this network");
  }
}

State steady_state(const Network& net) {
  State s(std::size_t{net.node_count()} + 1, 0);
  for (NodeId i = 1; i <= net.node_count(); ++i) s[i] = net.p[i];
  return s;
}

void step_into(const Network& net, const State& src, State& dst) {
  const NodeId n = net.node_count();
  dst.resize(std::size_t{n} + 1);
  dst[0] = 0;
  for (NodeId i = 1; i <= n; ++i) {
    const std::uint32_t s = src[i];
    if (s < net.p[i]) {
      dst[i] = s + 1;
      continue;
    }
    std::uint32_t firing = 0;
    const std::uint32_t need = net.th[i];
    for (NodeId j : net.graph.in_neighbors(i)) {
      if (src[j] == 0 && ++firing >= need) break;
    }
    dst[i] = (firing >= need) ? 0 : net.p[i];
  }
}

State step(const Network& net, const State& s) {
  require_valid_state(net, s);
  State out;
  step_into(net, s, out);
  return out;
}

std::vector<State> simulate(const Network& net, const State& s0, std::uint64_t t_max) {
  require_valid_state(net, s0);
  std::vector<State> traj;
  traj.reserve(t_max + 1);
  traj.push_back(s0);
  for (std::uint64_t t = 0; t < t_max; ++t) {
    State next;
    step_into(net, traj.back(), next);
    traj.push_back(std::move(next));
  }
  return traj;
}

std::size_t encoded_state_width(const Network& net) {
  return net.max_p() <= 255 ? 1 : 2;
}

void encode_state(const State& s, std::size_t width, std::string& out) {
  out.clear();
  const std::size_t n = s.size() - 1;
  out.reserve(n * width);
  if (width == 1) {
    for (std::size_t i = 1; i <= n; ++i) {
      out.push_back(static_cast<char>(s[i] & 0xff));
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      out.push_back(static_cast<char>(s[i] & 0xff));
      out.push_back(static_cast<char>((s[i] >> 8) & 0xff));
    }
  }
}

Network random_network(Digraph graph, std::uint32_t p_lo, std::uint32_t p_hi,
                       std::uint32_t th_lo, std::uint32_t th_hi, Rng& rng) {
  if (p_lo < 1 || p_lo > p_hi || th_lo < 1 || th_lo > th_hi) {
    throw std::invalid_argument("random_network: need 1 <= lo <= hi for p and th");
  }
  Network net;
  net.graph = std::move(graph);
  const NodeId n = net.graph.node_count();
  net.p.assign(std::size_t{n} + 1, 0);
  net.th.assign(std::size_t{n} + 1, 0);
  for (NodeId i = 1; i <= n; ++i) {
    net.p[i] = static_cast<std::uint32_t>(rng.between(p_lo, p_hi));
  }
  for (NodeId i = 1; i <= n; ++i) {
    net.th[i] = static_cast<std::uint32_t>(rng.between(th_lo, th_hi));
  }
  net.p[0] = net.th[0] = 0;
  net.validate();
  return net;
}

State random_state(const Network& net, Rng& rng) {
  State s(std::size_t{net.node_count()} + 1, 0);
  for (NodeId i = 1; i <= net.node_count(); ++i) {
    s[i] = static_cast<std::uint32_t>(rng.between(0, net.p[i]));
  }
  return s;
}

}  // namespace refnet
