// Copyright 2026 The amongus-sim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amongus/engine/observation.h"

#include "amongus/engine/rules.h"

namespace amongus {

Observation observe(const GameState& s, PlayerId viewer,
                    std::size_t public_since) {
  const auto& me = s.player(viewer);
  Observation o;
  o.viewer = viewer;
  o.viewer_role = me.role;
  o.player_names = s.player_names();
  o.map_cafeteria = s.config.map.cafeteria;
  o.timestep = s.timestep;
  o.round = s.round;
  o.current_room = me.location;
  o.own_tasks = me.tasks;
  if (me.role == Role::kImpostor) {
    for (const auto& p : s.players) {
      if (p.id != viewer && p.role == Role::kImpostor) o.teammates.push_back(p.id);
    }
  }
  for (std::size_t i = public_since; i < s.public_log.size(); ++i) {
    o.public_events.push_back(s.public_log[i]);
  }
  if (me.alive && s.phase != Phase::kFinished) {
    o.legal_actions = legal_actions(s, viewer);
  }

  if (s.phase == Phase::kMeeting) {
    const auto& m = *s.meeting;
    o.phase = m.stage == MeetingStage::kDiscussion ? ObservationPhase::kDiscussion
                                                   : ObservationPhase::kVoting;
    MeetingContext ctx;
    ctx.meeting_index = m.meeting_index;
    ctx.cause = m.cause;
    ctx.caller = m.caller;
    ctx.victim = m.victim;
    ctx.room = m.room;
    ctx.discussion_round = m.discussion_round + 1;
    ctx.transcript = m.transcript;
    for (const auto& p : s.players) {
      if (p.alive) ctx.attendees.push_back(p.id);
    }
    for (auto id : ctx.attendees) {
      if (id != viewer) o.visible_players.push_back(id);
    }
    o.meeting = std::move(ctx);
    return o;
  }

  for (const auto& p : s.players) {
    if (p.id != viewer && p.alive && p.location == me.location) {
      o.visible_players.push_back(p.id);
    }
  }
  for (const auto& b : s.bodies) {
    if (b.room == me.location) o.visible_bodies.push_back(b.victim);
  }
  return o;
}

}  // namespace amongus
