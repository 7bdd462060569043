#include "rrgd/raycast.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrgd {

namespace {

struct Hit {
    double t;     // distance from the current ray origin
    EdgeId edge;  // real edge id, or edge_count() + side for box sides
    Point point;
    double u;
};

// Pending hits of the current straight run, nearest first. Equal distances
// are ordered by edge id.
class HitQueue {
public:
    void assign(std::vector<Hit> hits) {
        hits_ = std::move(hits);
        std::sort(hits_.begin(), hits_.end(), [](const Hit& a, const Hit& b) {
            return a.t != b.t ? a.t < b.t : a.edge < b.edge;
        });
        next_ = 0;
    }
    bool empty() const { return next_ == hits_.size(); }
    const Hit* peek() const { return empty() ? nullptr : &hits_[next_]; }
    Hit pop() { return hits_[next_++]; }
    void clear() {
        hits_.clear();
        next_ = 0;
    }

private:
    std::vector<Hit> hits_;
    std::size_t next_{0};
};

enum class Outcome { done, degenerate };

class RayTracer {
public:
    RayTracer(const Graph& g, const Drawing& d, VertexId v, const RayConfig& cfg, Rng& rng)
        : g_(g), d_(d), v_(v), cfg_(cfg), rng_(rng) {
        const double diag = d.box().diagonal();
        forward_tol_ = cfg.forward_tol_rel * diag;
        eval_offset_ = cfg.eval_offset_rel * diag;
    }

    Outcome run(Angle theta, Ray& ray) {
        Point origin = d_.position(v_);
        Angle dir = theta;
        Point unit = dir.unit();
        Angle last_leg = dir;
        ray.points.assign(1, origin);
        queue_.clear();

        for (std::size_t i = 0; i < cfg_.ray_size; ++i) {
            if (queue_.empty()) {
                queue_.assign(collect_hits(origin, unit));
                // The box encloses the origin, so only numerical trouble lands here.
                if (queue_.empty()) return Outcome::degenerate;
            }
            const Hit hit = queue_.pop();
            if (is_degenerate(hit)) return Outcome::degenerate;
            ray.points.push_back(clamp_to_box(hit.point));
            last_leg = dir;

            const bool on_box = hit.edge >= g_.edge_count();
            bool reflect = on_box;
            if (!on_box) {
                const double op = opacity(g_, d_, v_, hit.edge, hit.point - eval_offset_ * unit);
                reflect = decide_reflection(op, cfg_.mode, rng_) == RayAction::reflect;
            }
            if (reflect) {
                origin = hit.point;
                dir = reflect_angle(dir, segment_angle(segment_of(hit.edge)));
                unit = dir.unit();
                queue_.clear();
            }
        }
        ray.dir = last_leg;
        return Outcome::done;
    }

private:
    Segment segment_of(EdgeId e) const {
        return e < g_.edge_count() ? d_.segment(g_, e) : d_.box().side(e - g_.edge_count());
    }

    std::vector<Hit> collect_hits(Point origin, Point unit) const {
        std::vector<Hit> hits;
        const std::size_t m = g_.edge_count();
        for (EdgeId e = 0; e < m + 4; ++e) {
            // Edges incident to the moving vertex travel with it.
            if (e < m && g_.edge(e).has(v_)) continue;
            if (auto h = halfline_hit(origin, unit, segment_of(e), forward_tol_)) {
                hits.push_back({h->t, e, h->point, h->u});
            }
        }
        return hits;
    }

    // A hit through a segment endpoint (graph vertex or box corner) or a hit
    // that coincides with the next pending one (crossing point) is ambiguous.
    bool is_degenerate(const Hit& hit) const {
        const Segment s = segment_of(hit.edge);
        const double len = distance(s.a, s.b);
        if (hit.u * len <= forward_tol_ || (1.0 - hit.u) * len <= forward_tol_) return true;
        if (const Hit* next = queue_.peek(); next && next->t - hit.t <= forward_tol_) return true;
        return false;
    }

    Point clamp_to_box(Point p) const {
        const BoundingBox& b = d_.box();
        return {std::clamp(p.x, b.min.x, b.max.x), std::clamp(p.y, b.min.y, b.max.y)};
    }

    const Graph& g_;
    const Drawing& d_;
    VertexId v_;
    const RayConfig& cfg_;
    Rng& rng_;
    double forward_tol_{0.0};
    double eval_offset_{0.0};
    HitQueue queue_;
};

}  // namespace

OpacityMode OpacityMode::randomized(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("randomized opacity needs epsilon > 0");
    return {Kind::randomized, eps};
}

int edge_weight(const Graph& g, const Drawing& d, VertexId v, EdgeId incident, Point eval_pos,
                EdgeId hit) {
    const Edge& inc = g.edge(incident);
    const Edge& target = g.edge(hit);
    if (inc.shares_vertex(target)) return 0;
    const Segment moved{eval_pos, d.position(inc.other(v))};
    return segments_cross(moved, d.segment(g, hit)) ? -1 : 1;
}

double opacity(const Graph& g, const Drawing& d, VertexId v, EdgeId hit, Point eval_pos) {
    int sum = 0;
    int relevant = 0;
    for (EdgeId e : g.incident(v)) {
        const int w = edge_weight(g, d, v, e, eval_pos, hit);
        if (w != 0) {
            sum += w;
            ++relevant;
        }
    }
    return relevant > 0 ? static_cast<double>(sum) / relevant : 1.0;
}

RayAction decide_reflection(double op, const OpacityMode& mode, Rng& rng) {
    if (!mode.is_randomized()) return op >= 0.0 ? RayAction::reflect : RayAction::cross;
    const double bound = 1.0 + mode.epsilon_rand;
    std::uniform_real_distribution<double> chi(-bound, bound);
    return chi(rng) < op ? RayAction::reflect : RayAction::cross;
}

std::optional<Ray> trace_ray(const Graph& g, const Drawing& d, VertexId v, Angle theta,
                             const RayConfig& cfg, Rng& rng) {
    if (cfg.ray_size < 1) throw std::invalid_argument("ray size must be at least 1");
    RayTracer tracer(g, d, v, cfg, rng);
    Ray ray;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        const Angle dir = Angle::radians(theta.value() + attempt * cfg.angle_jitter);
        if (tracer.run(dir, ray) == Outcome::done) return ray;
    }
    return std::nullopt;
}

std::optional<Point> cast_ray(const Graph& g, const Drawing& d, VertexId v, Angle theta,
                              const RayConfig& cfg, Rng& rng) {
    if (auto ray = trace_ray(g, d, v, theta, cfg, rng)) return ray->endpoint();
    return std::nullopt;
}

}  // namespace rrgd
