"""Command-line surface: dataset loading, example pipelines, golden runner.

Datasets are JSON bundles (group, irreducibles, pinned generic matrices,
semi-invariant specs, golden files); every command emits canonical JSON
(sorted keys) so identical inputs give byte-identical outputs.  Exit codes:
0 ok, 2 validation failure, 3 golden mismatch.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .exactmath import CycNum, Mat, MPoly
from .grouprep import (GroupError, Irrep, age_and_valuations,
                       enumerate_group, junior_classes, verify_irreps)
from . import mckay, moduli
from .cones import (Polyhedron, RatCone, _dot, _primitive,
                    brute_force_facets, dual_cone, face_semistable,
                    hilbert_mumford_check, hilbert_saturation_check,
                    lp_by_enumeration, lp_minimize, orbit_cone_of_ray)
from .semiinv import (PathMatrixSpec, SemiInvError, StabilityVector,
                      det_semiinvariant, factor_semiinvariant)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GOLDEN = 3


class DatasetError(ValueError):
    pass


def data_root():
    env = os.environ.get("CONSTEL_DATA_DIR")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "datasets")


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _emit(obj, out):
    text = canonical_json(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


class Dataset:
    """A dataset bundle, loaded and validated lazily."""

    def __init__(self, name, root=None):
        self.name = name
        self.path = os.path.join(root or data_root(), name)
        if not os.path.isdir(self.path):
            raise DatasetError("no dataset %r under %s"
                               % (name, root or data_root()))
        g = self._read("group.json")
        self.n = g["n"]
        self.variables = tuple(g["variables"])
        self.generators = [Mat.from_json(m) for m in g["generators"]]
        self._group = None
        self._irreps = None
        self._quiver = None
        self._fgens = None
        self._embedding = None
        self._semis = None

    def _read(self, name, optional=False):
        path = os.path.join(self.path, name)
        if not os.path.exists(path):
            if optional:
                return None
            raise DatasetError("dataset %s lacks %s" % (self.name, name))
        with open(path) as fh:
            return json.load(fh)

    @property
    def group(self):
        if self._group is None:
            self._group = enumerate_group(self.generators)
        return self._group

    @property
    def irreps(self):
        if self._irreps is None:
            obj = self._read("irreps.json")
            irreps = [Irrep(r["label"],
                            [Mat.from_json(m) for m in r["gen_images"]])
                      for r in obj["irreps"]]
            verify_irreps(self.group, irreps)
            self._irreps = irreps
        return self._irreps

    @property
    def quiver(self):
        if self._quiver is None:
            obj = self._read("generic_rep.json")
            pinned = {}
            for blk in obj["equivariant_bases"]:
                mats = [Mat([[MPoly.from_json(self.variables, e)
                              for e in row] for row in m])
                        for m in blk["matrices"]]
                pinned[(blk["source"], blk["target"])] = mats
            quiver = mckay.build_quiver(self.group, self.irreps,
                                        self.variables, pinned)
            quiver.arrow_names = {
                nm: quiver.arrow(info["tail"], info["head"], info["index"])
                for nm, info in obj["names"].items()}
            self._quiver = quiver
        return self._quiver

    @property
    def fgens(self):
        """(polys, names, exceptional); polys is None when unprinted."""
        if self._fgens is None:
            obj = self._read("fgens.json")
            names = [f["name"] for f in obj["fgens"]]
            polys = [None if f["poly"] is None else
                     MPoly.from_json(self.variables, f["poly"])
                     for f in obj["fgens"]]
            if any(p is None for p in polys):
                polys = None
            exc = obj.get("exceptional")
            if exc is not None:
                exc = [(tuple(e["p"]), e["order"]) for e in exc]
            self._fgens = (polys, names, exc)
        return self._fgens

    def spec_json(self, name):
        obj = self._read("semiinvariants.json")
        for spec in obj.get("specs", []):
            if spec["name"] == name:
                return spec
        raise DatasetError("no semi-invariant spec %r in dataset %s"
                           % (name, self.name))

    def semiinvariants(self):
        """Determinantal semi-invariants of every bundled spec, factored
        over the f-generators when those are available."""
        if self._semis is None:
            obj = self._read("semiinvariants.json")
            polys, _, _ = self.fgens
            semis = []
            for spec in obj.get("specs", []):
                s = det_semiinvariant(PathMatrixSpec.from_json(spec),
                                      self.quiver)
                if polys:
                    factor_semiinvariant(s, polys)
                semis.append(s)
            self._semis = semis
        return self._semis

    def embedding(self):
        if self._embedding is None:
            obj = self._read("semiinvariants.json")
            polys, fnames, exc = self.fgens
            if obj.get("vectors"):
                vectors = [tuple(v["vector"]) for v in obj["vectors"]]
                names = [v["name"] for v in obj["vectors"]]
                self._embedding = moduli.EmbeddingData(
                    obj["ell"], vectors, names=names, fgen_names=fnames,
                    exceptional=exc)
            elif obj.get("specs"):
                if not polys:
                    raise DatasetError(
                        "dataset %s has specs but no f-generator "
                        "polynomials" % self.name)
                self._embedding = moduli.build_embedding(
                    polys, self.semiinvariants(), fgen_names=fnames,
                    exceptional=exc)
            else:
                self._embedding = moduli.abelian_ambient(
                    self.group, variables=self.variables)
        return self._embedding

    def golden(self, name, optional=True):
        return self._read(os.path.join("golden", name), optional=optional)

    def golden_files(self):
        path = os.path.join(self.path, "golden")
        if not os.path.isdir(path):
            return []
        return sorted(os.listdir(path))


def _parse_theta(dataset, text, convention):
    if text == "+":
        emb = dataset.embedding()
        return (1,) * emb.sdim
    values = [Fraction(v) for v in text.split(",")]
    if convention == "reduced":
        return tuple(values)
    emb = dataset.embedding()
    if emb.labels is None:
        raise DatasetError("dataset carries no irrep labels; "
                           "use --convention reduced")
    vec = StabilityVector(emb.labels, emb.dims, values)
    if not vec.is_character():
        raise DatasetError("full theta must satisfy sum dim*theta = 0")
    return vec.reduced()


# -- command bodies ----------------------------------------------------------------------


def cmd_group_info(ds, args):
    G = ds.group
    data = age_and_valuations(G)
    classes = []
    for d in data:
        classes.append({"order": d.order,
                        "exponents": list(d.exponents),
                        "age": str(d.age),
                        "junior": d.junior})
    return {"dataset": ds.name, "order": G.order,
            "class_count": len(G.conj_classes),
            "nontrivial_classes": classes,
            "junior_count": sum(1 for c in classes if c["junior"])}


def cmd_mckay(ds, args):
    counts = mckay.arrow_counts(ds.group, ds.irreps)
    quiver = ds.quiver   # raises on any equivariance defect
    residues = mckay.commutator_relations(quiver)
    return {"dataset": ds.name,
            "arrow_counts": {"%s->%s" % k: v
                             for k, v in sorted(counts.items()) if v},
            "arrows": sorted(a.name for a in quiver.arrows),
            "commutator_residues": sorted("%d,%d" % k for k in residues)}


def cmd_semiinv(ds, args):
    if args.spec and os.path.exists(args.spec):
        with open(args.spec) as fh:
            spec = json.load(fh)
    elif args.spec:
        spec = ds.spec_json(args.spec)
    else:
        raise DatasetError("semiinv eval needs --spec NAME|FILE")
    s = det_semiinvariant(PathMatrixSpec.from_json(spec), ds.quiver)
    out = {"dataset": ds.name, "name": s.spec.name,
           "weight": [str(v) for v in s.weight.values],
           "weight_reduced": [str(v) for v in s.weight.reduced()],
           "degenerate": s.degenerate,
           "phi_image": s.phi_image.to_json()}
    polys, _, _ = ds.fgens
    if polys and not s.degenerate:
        factor_semiinvariant(s, polys)
        out["exponents"] = list(s.exponents)
        out["lattice_vector"] = [str(v) for v in s.lattice_vector()]
    return out


def cmd_embed(ds, args):
    emb = ds.embedding()
    sigma = emb.sigma_w
    out = {"dataset": ds.name,
           "generator_count": len(emb.weight_vectors),
           "ambient_dim": sigma.ambient_dim,
           "ray_count": len(sigma.rays),
           "facet_count": len(sigma.facets),
           "p_image_types": sorted([list(p) for p in emb.p_image_types()])}
    if args.degree_bound is not None:
        grading = [1] * emb.ell + [0] * emb.sdim
        ok, witness = hilbert_saturation_check(
            emb.weight_vectors, dual_cone(sigma), args.degree_bound,
            grading=grading)
        out["saturation"] = {"degree_bound": args.degree_bound,
                             "gap_free": ok,
                             "witness": list(witness) if witness else None}
    return out


def cmd_chamber(ds, args):
    emb = ds.embedding()
    theta = _parse_theta(ds, args.theta, args.convention)
    try:
        ctx = moduli.chamber_at(emb, theta)
        cone = ctx.cone.to_json()
        selected = ctx.selected
        psi = [list(r) for r in ctx.psi_matrix]
    except moduli.WallError:
        # the toric chamber construction needs ell selected rays per
        # maximal face; fall back to the ray selection alone
        selected, _, _ = moduli.selected_rays(emb, theta)
        cone = None
        ell = emb.ell
        psi = [[-c for c in w[ell:]] for w in selected]
    return {"dataset": ds.name, "theta": [str(v) for v in theta],
            "w_rays": [list(w) for w in selected],
            "psi_matrix": psi,
            "chamber": cone}


def cmd_cones(ds, args):
    cones = []
    for path in args.inputs or []:
        with open(path) as fh:
            cones.append(RatCone.from_json(json.load(fh)))
    if not cones:
        raise DatasetError("cones %s needs at least one --in" % args.op)
    if args.op == "dual":
        result = dual_cone(cones[0])
    elif args.op == "rays":
        result = cones[0]
        result.rays, result.facets
    elif args.op == "intersect":
        if len(cones) < 2:
            raise DatasetError("cones intersect needs two --in files")
        result = cones[0]
        for c in cones[1:]:
            result = result.intersect(c)
    else:
        raise DatasetError("unknown cones op %r" % args.op)
    return result.to_json()


def cmd_mov(ds, args):
    emb = ds.embedding()
    mov = moduli.movable_cone(emb)
    return {"dataset": ds.name, "mov": mov.to_json()}


def _named_nef_cones(ds, emb):
    """Nef cones of the junior-simplex triangulations, keyed X_1, X_2, ..."""
    pts = moduli.junior_simplex_points(emb)
    tris, edges = moduli.triangulations(pts)
    flops = ds.golden("flops.json")
    if flops and flops.get("anchor"):
        anchor = tuple(tuple(p) for p in flops["anchor"])
    else:
        anchor = min(tuple(sorted(s)) for s in tris[0].simplices)
    labels = moduli.flop_graph_labeling(tris, edges, anchor)
    named = {labels[k]: tri for k, tri in enumerate(tris)}
    return ({nm: moduli.nef_cone(tri, emb) for nm, tri in named.items()},
            named, tris, edges, labels)


def cmd_explore(ds, args):
    emb = ds.embedding()
    theta = _parse_theta(ds, args.theta, args.convention)
    if os.path.exists(args.goal):
        with open(args.goal) as fh:
            goal = RatCone.from_json(json.load(fh))
    else:
        nefs, _, _, _, _ = _named_nef_cones(ds, emb)
        if args.goal not in nefs:
            raise DatasetError("unknown goal %r (have %s)"
                               % (args.goal, sorted(nefs)))
        goal = nefs[args.goal]
    path = moduli.explore_chambers(emb, theta, goal,
                                   max_iters=args.max_iters)
    steps = []
    for ctx, swaps in path:
        steps.append({"w_rays": [list(w) for w in ctx.selected],
                      "swaps": [{"from": list(a), "to": list(b)}
                                for a, b in swaps]})
    return {"dataset": ds.name, "goal": args.goal,
            "steps": len(path) - 1, "path": steps}


# -- golden checks -----------------------------------------------------------------------


def _check(name, ok, detail=""):
    return {"check": name, "ok": bool(ok), "detail": detail}


def _eval_path_sum(quiver, terms):
    acc = None
    for t in terms:
        m = None
        for step in t["path"].split("*"):
            a = quiver.arrow_names[step].matrix
            m = a if m is None else mckay._poly_mat_mul(m, a)
        coeff = CycNum.from_json(t["coeff"])
        m = Mat([[e * coeff for e in row] for row in m.entries])
        acc = m if acc is None else acc + m
    return acc


def golden_checks(ds, degree_bound=None):
    """Run every golden comparison the dataset bundles; yields checks."""
    results = []
    files = ds.golden_files()

    if "mckay.json" in files:
        g = ds.golden("mckay.json")
        counts = {"%s->%s" % k: v
                  for k, v in mckay.arrow_counts(ds.group, ds.irreps).items()
                  if v}
        results.append(_check("mckay arrow counts",
                              counts == g["arrow_counts"]))

    if "relations.json" in files:
        g = ds.golden("relations.json")
        ok = True
        bad = []
        for rel in g["relations"]:
            if not mckay._mat_is_zero(_eval_path_sum(ds.quiver,
                                                     rel["terms"])):
                ok = False
                bad.append(rel["name"])
        results.append(_check("generic matrices satisfy relations", ok,
                              ",".join(bad)))

    if "semiinvariants.json" in files:
        g = ds.golden("semiinvariants.json")
        polys = {nm: MPoly.from_json(ds.variables, p)
                 for nm, p in g["polynomials"].items()}
        ok = True
        bad = []
        for s in ds.semiinvariants():
            target = polys[g["proportional_to"][s.spec.name]]
            if not _proportional(s.phi_image, target):
                ok = False
                bad.append(s.spec.name)
        results.append(_check("semi-invariant images proportional to "
                              "printed polynomials", ok, ",".join(bad)))

    if "lattice_vectors.json" in files:
        g = ds.golden("lattice_vectors.json")
        vec = {s.spec.name: list(s.lattice_vector())
               for s in ds.semiinvariants()}
        results.append(_check("semi-invariant lattice vectors", vec == g))

    if "cox_generators.json" in files:
        g = ds.golden("cox_generators.json")
        terms, _ = moduli.cox_generators_report(ds.embedding())
        got = [{"base": (t.base.to_json() if t.base is not None else None),
                "t_exponents": list(t.t_exponents)} for t in terms]
        results.append(_check("cox generators", got == g["terms"]))

    if "embed.json" in files:
        g = ds.golden("embed.json")
        emb = ds.embedding()
        ok = True
        detail = []
        if "ray_count" in g:
            rays = len(emb.sigma_w.rays)
            ok &= rays == g["ray_count"]
            detail.append("rays %d/%d" % (rays, g["ray_count"]))
        if "facet_count" in g:
            nf = len(emb.sigma_w.facets)
            ok &= nf == g["facet_count"]
            detail.append("facets %d/%d" % (nf, g["facet_count"]))
        if "p_image_types" in g:
            types = sorted([list(p) for p in emb.p_image_types()])
            ok &= types == g["p_image_types"]
        results.append(_check("embedding census", ok, " ".join(detail)))

    ctx = None
    if "chamber.json" in files:
        g = ds.golden("chamber.json")
        emb = ds.embedding()
        theta = tuple(g["theta"])
        try:
            ctx = moduli.chamber_at(emb, theta)
            selected = ctx.selected
        except moduli.WallError:
            selected, _, _ = moduli.selected_rays(emb, theta)
        ok = [list(w) for w in selected] == g["w_rays"]
        if "psi_matrix" in g and ctx is not None:
            ok = ok and [list(r) for r in ctx.psi_matrix] == g["psi_matrix"]
        results.append(_check("chamber rays at theta", ok))

    nefs = named = None
    if "flops.json" in files:
        g = ds.golden("flops.json")
        emb = ds.embedding()
        nefs, named, tris, edges, labels = _named_nef_cones(ds, emb)
        ok = len(tris) == g["count"]
        edge_names = sorted([sorted((labels[i], labels[j]))
                             for i, j in edges])
        ok = ok and edge_names == sorted(g["edges"])
        got = {nm: sorted([list(q) if isinstance(q, tuple)
                           else list(tri.points[q]) for q in simplex]
                          for simplex in tri.simplices)
               for nm, tri in named.items()}
        ok = ok and got == g["triangulations"]
        results.append(_check("triangulations and flop graph", ok))

    if "nef_x1.json" in files and ctx is not None and nefs is not None:
        g = ds.golden("nef_x1.json")
        nef1 = nefs["X_1"]
        ok = [list(r) for r in nef1.rays] == g["rays"]
        ok = ok and nef1 == ctx.psi_image(ctx.cone)
        results.append(_check("psi(chamber) equals Nef(X_1)", ok))

    if "mov.json" in files:
        g = ds.golden("mov.json")
        emb = ds.embedding()
        mov = moduli.movable_cone(emb)
        ok = [list(r) for r in mov.rays] == g["rays"] and \
            [list(f) for f in mov.facets] == g["facets"]
        if ctx is not None and nefs is not None:
            img = ctx.psi_image(ctx.c_plus)
            ok = ok and all(nefs["X_%d" % i].is_subcone_of(img)
                            for i in range(1, 6))
            ok = ok and img.intersect(nefs["X_6"]).dim() < img.dim()
            ok = ok and img.is_subcone_of(mov)
        results.append(_check("movable cone and nef union", ok))

    if "explore.json" in files and ctx is not None:
        g = ds.golden("explore.json")
        emb = ds.embedding()
        goal = RatCone.from_rays([tuple(r) for r in g["goal_rays"]],
                                 len(g["goal_rays"][0]))
        theta = tuple(ds.golden("chamber.json")["theta"])
        path = moduli.explore_chambers(emb, theta, goal, max_iters=64)
        swaps = [s for _, sw in path[1:] for s in sw]
        ok = len(path) - 1 == g["steps"] and len(swaps) == 1
        if swaps:
            ok = ok and list(swaps[0][0]) == g["swap_from"]
            ok = ok and list(swaps[0][1]) == g["swap_to"]
        kind, _ = moduli.classify_wall(ctx, tuple(g["wall"]))
        ok = ok and kind == g["wall_kind"]
        results.append(_check("exploration reaches the goal via the "
                              "printed swap", ok))

    if "type_b_face.json" in files:
        g = ds.golden("type_b_face.json")
        emb = ds.embedding()
        vecs = {s.spec.name: s.lattice_vector()
                for s in ds.semiinvariants()}
        cut = [vecs[nm] for nm in g["vanishing"]]
        face = sorted(r for r in emb.sigma_w.rays
                      if all(_dot(a, r) == 0 for a in cut))
        results.append(_check("type-B face rays",
                              [list(r) for r in face] == g["rays"]))

    if "saturation.json" in files:
        g = ds.golden("saturation.json")
        bound = degree_bound if degree_bound is not None \
            else g["degree_bound"]
        emb = ds.embedding()
        grading = [1] * emb.ell + [0] * emb.sdim
        ok, witness = hilbert_saturation_check(
            emb.weight_vectors, dual_cone(emb.sigma_w), bound,
            grading=grading)
        results.append(_check("semigroup saturation to degree %d" % bound,
                              ok == g["gap_free"],
                              "witness %r" % (witness,) if witness else ""))

    if "orbit_cones.json" in files:
        g = ds.golden("orbit_cones.json")
        emb = ds.embedding()
        groups = emb.rays_by_p_image()
        byname = dict(zip(emb.names, emb.weight_vectors))
        ok = True
        for nm, expect in g.items():
            vec = byname[nm]
            family = groups[emb.p_image(vec)]
            cone = orbit_cone_of_ray(family, vec, emb.ell)
            if [list(f) for f in cone.facets] != expect["facets"]:
                ok = False
        results.append(_check("orbit cone inequalities", ok))

    if "cones.json" in files:
        g = ds.golden("cones.json")
        obj = ds._read("constellations.json")
        gcs = {}
        for c in obj["constellations"]:
            gc = moduli.GradedConstellation.from_json(
                c, obj["labels"], obj["dims"])
            gc.check_module_class()
            gcs[gc.name] = gc
        ok = True
        inter = None
        for nm, (d, nf) in sorted(g["orbit_cones"].items()):
            cone = moduli.graded_constellation_orbit_cone(gcs[nm])
            ok &= cone.dim() == d and len(cone.facets) == nf
            inter = cone if inter is None else inter.intersect(cone)
        ok &= inter.dim() == g["intersection_dim"]
        pt = inter.relint_point()
        ok &= [str(c) for c in pt] == g["interior_point"]
        ok &= all(sum(f * c for f, c in zip(facet, pt)) > 0
                  for facet in inter.facets)
        results.append(_check("constellation orbit cones intersect in a "
                              "full-dimensional cone", ok,
                              "interior point %r" % (pt,)))

    return results


def _proportional(p, q):
    if sorted(p.terms) != sorted(q.terms):
        return False
    if not p.terms:
        return True
    e0 = sorted(p.terms)[0]
    ratio = p.terms[e0] / q.terms[e0]
    return bool(ratio) and all(p.terms[e] == ratio * q.terms[e]
                               for e in p.terms)


# -- randomized cross-validation suites (fixed seed) ---------------------------------------


def dd_suite(rng, count=200):
    """Double description vs brute-force facet enumeration."""
    done = 0
    while done < count:
        dim = rng.randint(2, 4)
        rays = [tuple(rng.randint(-4, 4) for _ in range(dim))
                for _ in range(rng.randint(dim, dim + 4))]
        rays = [r for r in rays if any(r)]
        if not rays:
            continue
        cone = RatCone.from_rays(rays, dim)
        if cone.dim() < dim or not cone.is_pointed():
            continue
        brute = brute_force_facets(cone.rays, dim)
        if sorted(cone.facets) != sorted(brute):
            return False, {"rays": rays, "dd": sorted(cone.facets),
                           "brute": sorted(brute)}
        done += 1
    return True, None


def lp_suite(rng, count=200):
    """Simplex vs vertex-enumeration minimization."""
    done = 0
    while done < count:
        dim = rng.randint(2, 4)
        rows = rng.randint(dim, dim + 4)
        a_ge = [[rng.randint(-3, 3) for _ in range(dim)]
                for _ in range(rows)]
        b_ge = [rng.randint(-3, 3) for _ in range(rows)]
        if any(all(c == 0 for c in row) for row in a_ge):
            continue
        poly = Polyhedron.from_hrep(a_ge, b_ge)
        objective = [rng.randint(-3, 3) for _ in range(dim)]
        s1, v1, _ = lp_minimize(objective, poly)
        s2, v2, _ = lp_by_enumeration(objective, poly)
        if s1 != s2 or (s1 == "optimal" and v1 != v2):
            return False, {"a_ge": a_ge, "b_ge": b_ge,
                           "objective": objective,
                           "simplex": (s1, str(v1)),
                           "enumeration": (s2, str(v2))}
        done += 1
    return True, None


def hm_suite(rng, count=100):
    """LP semistability test vs the Hilbert-Mumford cone criterion."""
    done = 0
    while done < count:
        ell = 2
        sdim = rng.randint(2, 3)
        vecs = []
        for _ in range(rng.randint(4, 8)):
            a = [rng.randint(0, 2) for _ in range(ell)]
            if not any(a):
                a[rng.randint(0, ell - 1)] = 1
            vecs.append(tuple(a) + tuple(rng.randint(-3, 3)
                                         for _ in range(sdim)))
        emb = moduli.EmbeddingData(ell, vecs)
        rays = emb.sigma_w.rays
        if not rays:
            continue
        k = rng.randint(1, min(3, len(rays)))
        face_point = tuple(sum(c) for c in zip(
            *rng.sample(list(rays), k)))
        theta = tuple(rng.randint(-3, 3) for _ in range(sdim))
        lhs = face_semistable(emb, theta, face_point)
        rhs = hilbert_mumford_check(emb, theta, face_point)
        if lhs != rhs:
            return False, {"vectors": vecs, "face_point": face_point,
                           "theta": theta, "lp": lhs, "hm": rhs}
        done += 1
    return True, None


def property_suites(seed=0):
    import random
    results = []
    for name, fn in (("double description vs brute force", dd_suite),
                     ("simplex vs vertex enumeration", lp_suite),
                     ("semistability LP vs Hilbert-Mumford", hm_suite)):
        ok, witness = fn(random.Random(seed))
        results.append(_check(name, ok,
                              "" if ok else json.dumps(witness)))
    return results


def cmd_golden(args):
    root = data_root()
    names = [args.dataset] if args.dataset else sorted(os.listdir(root))
    if args.all:
        names = sorted(os.listdir(root))
    report = {}
    ok = True
    for name in names:
        ds = Dataset(name, root=root)
        checks = golden_checks(ds, degree_bound=args.degree_bound)
        report[name] = checks
        ok &= all(c["ok"] for c in checks)
    if args.all:
        checks = property_suites()
        report["property-suites"] = checks
        ok &= all(c["ok"] for c in checks)
    _emit({"datasets": report, "pass": bool(ok)}, args.out)
    return EXIT_OK if ok else EXIT_GOLDEN


# -- entry point -------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="constel",
        description="Exact polyhedral data of moduli of G-constellations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, theta=False, goal=False):
        p.add_argument("--dataset", required=True)
        p.add_argument("--out", default=None)
        if theta:
            p.add_argument("--theta", default="+")
            p.add_argument("--convention", choices=("reduced", "full"),
                           default="reduced")
        if goal:
            p.add_argument("--goal", required=True)
            p.add_argument("--max-iters", type=int, default=64)
        return p

    common(sub.add_parser("group-info"))
    common(sub.add_parser("mckay"))
    p = common(sub.add_parser("semiinv"))
    p.add_argument("op", choices=("eval",))
    p.add_argument("--spec", default=None)
    p = common(sub.add_parser("embed"))
    p.add_argument("--degree-bound", type=int, default=None)
    common(sub.add_parser("chamber"), theta=True)
    p = sub.add_parser("cones")
    p.add_argument("op", choices=("dual", "rays", "intersect"))
    p.add_argument("--in", dest="inputs", action="append")
    p.add_argument("--out", default=None)
    p.add_argument("--dataset", default=None)
    common(sub.add_parser("mov"))
    common(sub.add_parser("explore"), theta=True, goal=True)
    p = sub.add_parser("golden")
    p.add_argument("--dataset", default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--degree-bound", type=int, default=None)
    return parser


_COMMANDS = {
    "group-info": cmd_group_info,
    "mckay": cmd_mckay,
    "semiinv": cmd_semiinv,
    "embed": cmd_embed,
    "chamber": cmd_chamber,
    "cones": cmd_cones,
    "mov": cmd_mov,
    "explore": cmd_explore,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "golden":
            return cmd_golden(args)
        ds = Dataset(args.dataset) if args.dataset else None
        result = _COMMANDS[args.command](ds, args)
        _emit(result, args.out)
        return EXIT_OK
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
