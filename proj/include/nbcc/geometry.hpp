#pragma once

#include "graph.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nbcc {

using Point = std::vector<double>;

struct Ball {
    Point center;
    double radius = 1.0;
};

struct AxisBox {
    Point low;
    Point high;
};

using Primitive = std::variant<Ball, AxisBox>;

// Union of primitives treated as a single object.
struct UnionGroup {
    std::vector<Primitive> members;
};

using FatObject = std::variant<Ball, AxisBox, UnionGroup>;

struct SceneMeta {
    std::string generator;  // empty for hand-built scenes
    std::string shape;
    std::uint32_t n = 0;
    double size_min = 0.0;
    double size_max = 0.0;
    double area_side = 0.0;
    std::uint64_t seed = 0;
};

struct FatScene {
    unsigned d = 2;
    std::vector<FatObject> objects;
    SceneMeta meta;
};

// Throws input_error on inconsistent dimensions, non-positive radii or
// unordered box corners.
void validate_object(const FatObject& obj, unsigned d);
void validate_scene(const FatScene& scene);

unsigned dimension(const FatObject& obj);

// Bounding box of the object.
AxisBox bounds(const FatObject& obj);

// Side of the smallest enclosing axis-aligned hypercube.
double object_size(const FatObject& obj);

// Closed-set intersection (touching counts). Throws input_error when the
// dimensions differ.
bool intersects(const FatObject& a, const FatObject& b);

bool contains(const FatObject& obj, const Point& p, double eps = 0.0);

// Vertex i per object, edge iff the objects intersect. Labels are "obj<i>".
Graph intersection_graph(const FatScene& scene);

enum class ClusterBound { diameter, radius };

// Scene of one UnionGroup per subset (group members are the primitives of the
// subset's objects). Each subset must be non-empty, disjoint from the others
// and induce a connected subgraph of diameter (or radius) at most t in the
// intersection graph; otherwise precondition_error names the subset.
FatScene cluster_union(const FatScene& scene, const std::vector<VertexSet>& subsets, std::uint32_t t,
                       ClusterBound bound = ClusterBound::diameter);

enum class PiercingMethod { exact, candidates, greedy };
std::string to_string(PiercingMethod m);

struct Piercing {
    std::uint32_t count = 0;
    std::vector<Point> points;
    PiercingMethod method = PiercingMethod::exact;
};

// Smallest point set hitting every object. Exact for axis boxes (up to 64 of
// them) via grid candidates; set cover over centres and pairwise witnesses for
// at most 12 objects (exact for balls in the plane); greedy otherwise.
Piercing min_piercing(const std::vector<FatObject>& objects);

struct FatnessSample {
    Point center;
    double size = 0.0;            // side r of the query box
    std::uint32_t collected = 0;  // objects of size >= r meeting the box
    std::uint32_t piercing = 0;
    PiercingMethod method = PiercingMethod::exact;
};

struct FatnessEstimate {
    std::uint32_t c_estimate = 0;
    bool all_exact = true;
    std::vector<FatnessSample> samples;
};

// Samples query boxes (centre uniform in the scene's bounding box, side drawn
// from the multiset of object sizes) and reports the largest piercing number.
FatnessEstimate estimate_fatness(const FatScene& scene, std::uint32_t samples, std::uint64_t seed);

// Re-evaluates a recorded sample trace against a (possibly different) scene.
FatnessEstimate fatness_on_trace(const FatScene& scene, const std::vector<FatnessSample>& trace);

enum class SceneShape { ball, box };

// n objects with centres uniform in [0, area_side]^d and sizes uniform in
// [size_min, size_max]; per object, d centre draws then one size draw. A ball
// of size s has radius s/2; a box of size s is a cube of side s.
FatScene gen_scene(SceneShape shape, std::uint32_t n, unsigned d, double size_min, double size_max,
                   double area_side, std::uint64_t seed);

SceneShape parse_shape(const std::string& name);

} // namespace nbcc
