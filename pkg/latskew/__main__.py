from latskew.harness.cli import main


raise SystemExit(main())
