"""HTTP front end exposing the clustering pipeline.

Run with ``uvicorn eigencluster.service:app``.  The endpoints wrap the same
pipeline functions the CLI uses; requests are validated by pydantic models
and domain errors surface as HTTP 400 responses.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .errors import ClusteringError
from .pipeline import check_labels, cluster_points, generate_points

app = FastAPI(
    title="eigencluster",
    description="Minimal delta-separated clustering of plane point sets",
)

Point = tuple[float, float]


class ClusterRequest(BaseModel):
    points: list[Point] = Field(min_length=1)
    delta: float = Field(default=0.1, gt=0)
    algorithm: Literal["naive", "real", "delaunay"] = "delaunay"
    dsu: Literal["labels", "forest"] = "forest"
    mode: Literal["float", "filtered", "exact"] = "filtered"
    dedup: bool = True
    perturb: Optional[float] = Field(default=None, ge=0)
    conjugate_pairs: bool = False
    seed: int = 0


class ClusterResponse(BaseModel):
    labels: list[int]
    k: int


class GenerateRequest(BaseModel):
    dist: Literal["circles", "squares"]
    n: int = Field(ge=1)
    seed: int = 0
    circles: int = 5
    spacing: float = 0.2
    origin_multiplicity: int = 1
    side: float = 0.04
    center_spacing: float = 0.15
    squares: int = 5


class GenerateResponse(BaseModel):
    points: list[Point]


class CheckRequest(BaseModel):
    points: list[Point] = Field(min_length=1)
    labels: list[int]
    delta: float = Field(default=0.1, gt=0)


class CheckResponse(BaseModel):
    admissible: bool
    matches_components: bool
    failed_criterion: Optional[int]
    witness: Optional[Union[tuple[int, int], int]]
    components_k: int
    given_k: int


@app.get("/")
def info():
    return {"service": "eigencluster", "endpoints": ["/cluster", "/generate", "/check"]}


@app.post("/cluster", response_model=ClusterResponse)
def cluster(req: ClusterRequest) -> ClusterResponse:
    try:
        clustering = cluster_points(
            req.points, req.delta, algorithm=req.algorithm, dsu_kind=req.dsu,
            mode=req.mode, dedup=req.dedup, perturb_magnitude=req.perturb,
            conjugate_pairs=req.conjugate_pairs, seed=req.seed,
        )
    except (ClusteringError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return ClusterResponse(labels=list(clustering.labels), k=clustering.k)


@app.post("/generate", response_model=GenerateResponse)
def generate(req: GenerateRequest) -> GenerateResponse:
    if req.dist == "circles":
        params = dict(circles=req.circles, spacing=req.spacing,
                      origin_multiplicity=req.origin_multiplicity)
    else:
        params = dict(side=req.side, center_spacing=req.center_spacing,
                      squares=req.squares)
    try:
        spectrum = generate_points(req.dist, req.n, req.seed, **params)
    except (ClusteringError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return GenerateResponse(points=[(p.re, p.im) for p in spectrum.points])


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    if len(req.labels) != len(req.points):
        raise HTTPException(
            status_code=400,
            detail=f"{len(req.labels)} labels for {len(req.points)} points",
        )
    try:
        outcome = check_labels(req.points, req.labels, req.delta)
    except (ClusteringError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return CheckResponse(
        admissible=outcome.admissible,
        matches_components=outcome.matches_components,
        failed_criterion=outcome.failed_criterion,
        witness=outcome.witness,
        components_k=outcome.components_k,
        given_k=outcome.given_k,
    )
