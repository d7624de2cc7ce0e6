/*
 * Copyright 2026 The ftrans Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#pragma once

// Debug dump of a disk arrangement. The schema is described in README.md.

#include <json.hpp>

#include "ftrans/arrangement.hpp"

namespace ftrans::cli {

inline nlohmann::json point_json(Point2 p) { return nlohmann::json::array({p.x, p.y}); }

inline nlohmann::json arrangement_to_json(const ArrangementGraph& ag) {
    using nlohmann::json;
    json doc;
    doc["radius"] = ag.radius;
    doc["snap"] = ag.snap;
    doc["point_mode"] = ag.point_mode;

    json circles = json::array();
    for (const auto& c : ag.circles) {
        json entries = json::array();
        for (const Cell& e : c.entries) entries.push_back({e.row, e.col});
        circles.push_back({{"center", point_json(c.center)},
                           {"entries", entries},
                           {"vertices", c.vertices},
                           {"component", c.component}});
    }
    doc["circles"] = circles;

    json vertices = json::array();
    for (const auto& v : ag.vertices) {
        vertices.push_back({{"position", point_json(v.position)},
                            {"circles", v.circles},
                            {"artificial", v.artificial},
                            {"component", v.component}});
    }
    doc["vertices"] = vertices;

    json faces = json::array();
    for (std::size_t f = 0; f < ag.faces.size(); ++f) {
        const auto& face = ag.faces[f];
        faces.push_back({{"component", face.component},
                         {"outer", face.outer},
                         {"sample", point_json(face.sample)},
                         {"circles", face.circles},
                         {"arcs", ag.face_arcs[f]}});
    }
    doc["faces"] = faces;

    json dual = json::array();
    for (int a = 0; a < ag.arc_count(); ++a) {
        const auto& d = ag.dual_edges[a];
        const auto& h = ag.half_edges[2 * a];
        dual.push_back({{"arc", a},
                        {"circle", d.circle},
                        {"from", h.origin},
                        {"to", h.dest},
                        {"inside", d.inside},
                        {"outside", d.outside}});
    }
    doc["dual_edges"] = dual;
    return doc;
}

} // namespace ftrans::cli
