#!/usr/bin/env python3
"""Simple server runner without uvicorn CLI."""

if __name__ == "__main__":
    import uvicorn

    from tanglekit.config import get_settings

    settings = get_settings()
    print("Starting Tanglekit API...")
    print(f"Server will be available at: http://localhost:{settings.port}")
    print(f"API docs at: http://localhost:{settings.port}/docs")
    print("\nPress Ctrl+C to stop\n")

    uvicorn.run(
        "tanglekit.main:app",
        host=settings.host,
        port=settings.port,
        reload=True,
        log_level=settings.log_level.lower(),
    )
