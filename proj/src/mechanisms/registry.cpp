#include <array>
#include <string>

#include "fairdiv/error.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv::mechanisms {

namespace {

constexpr Claims kTwoAgentClaims{.truthful = true, .envy_free = true, .proportional = true, .pareto = true,
                                 .full_allocation = true};

const std::array<Mechanism, 6> kMechanisms{{
    {MechanismId::Mech1Cake, "mech1", ResourceKind::Cake, 2, false, kTwoAgentClaims},
    {MechanismId::Mech2Chore, "mech2", ResourceKind::Chore, 2, false, kTwoAgentClaims},
    {MechanismId::Mech3Cake, "mech3", ResourceKind::Cake, std::nullopt, true, kTwoAgentClaims},
    {MechanismId::Mech4Chore, "mech4", ResourceKind::Chore, std::nullopt, true,
     Claims{.truthful = true, .proportional = true, .pareto = true, .full_allocation = true}},
    {MechanismId::CutAndChoose, "cut-and-choose", ResourceKind::Cake, 2, false,
     Claims{.envy_free = true, .proportional = true, .full_allocation = true}},
    {MechanismId::ConnectedFreeDisposal, "connected-free-disposal", ResourceKind::Cake, 2, true,
     Claims{.truthful = true, .envy_free = true, .proportional = true, .connected = true}},
}};

}  // namespace

Allocation Mechanism::run(const Instance& inst) const {
  if (inst.agents() == 0) throw Error(ErrorCode::PreconditionUnmet, std::string(name) + " needs at least one agent");
  if (required_agents && inst.agents() != *required_agents) {
    throw Error(ErrorCode::PreconditionUnmet, std::string(name) + " needs exactly " +
                                                  std::to_string(*required_agents) + " agents, got " +
                                                  std::to_string(inst.agents()));
  }
  if (inst.kind != kind) {
    throw Error(ErrorCode::PreconditionUnmet,
                std::string(name) + " divides a " + std::string(to_string(kind)) + ", not a " +
                    std::string(to_string(inst.kind)));
  }
  const auto& vs = inst.valuations;
  switch (id) {
    case MechanismId::Mech1Cake: return mech1_cake(vs[0], vs[1]);
    case MechanismId::Mech2Chore: return mech2_chore(vs[0], vs[1]);
    case MechanismId::Mech3Cake: return mech3_cake(prefix_endpoints(inst));
    case MechanismId::Mech4Chore: return mech4_chore(prefix_endpoints(inst));
    case MechanismId::CutAndChoose: return cut_and_choose(vs[0], vs[1]);
    case MechanismId::ConnectedFreeDisposal:
      return connected_free_disposal(prefix_endpoint(vs[0]), prefix_endpoint(vs[1]));
  }
  throw Error(ErrorCode::InvariantViolated, "unknown mechanism");
}

std::span<const Mechanism> all_mechanisms() { return kMechanisms; }

const Mechanism& mechanism(MechanismId id) {
  for (const auto& m : kMechanisms) {
    if (m.id == id) return m;
  }
  throw Error(ErrorCode::InvariantViolated, "unregistered mechanism");
}

const Mechanism* find_mechanism(std::string_view name) {
  for (const auto& m : kMechanisms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace fairdiv::mechanisms
